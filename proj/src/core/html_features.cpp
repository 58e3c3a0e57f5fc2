#include "core/html_features.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "core/error.hpp"

namespace phishlens {

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':';
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

struct Attr {
    std::string name;
    std::string value;
    bool has_value = false;
};

// Parses the attribute list of one tag; stops at '>' or end of input.
// Returns the index just past the closing '>' (or text.size()).
std::size_t parse_attrs(const std::string& text, std::size_t pos, std::vector<Attr>& out) {
    const std::size_t n = text.size();
    while (pos < n) {
        while (pos < n && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        if (pos >= n) return n;
        if (text[pos] == '>') return pos + 1;
        if (text[pos] == '<') return pos; // tag never closed; resync on next tag

        Attr attr;
        const std::size_t name_start = pos;
        while (pos < n && is_name_char(text[pos])) ++pos;
        if (pos == name_start) {
            ++pos; // stray byte, skip
            continue;
        }
        attr.name = to_lower(text.substr(name_start, pos - name_start));

        while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos < n && text[pos] == '=') {
            ++pos;
            while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos < n && (text[pos] == '"' || text[pos] == '\'')) {
                const char quote = text[pos++];
                const std::size_t val_start = pos;
                while (pos < n && text[pos] != quote) ++pos;
                attr.value = text.substr(val_start, pos - val_start);
                if (pos < n) ++pos;
            } else {
                const std::size_t val_start = pos;
                while (pos < n && !std::isspace(static_cast<unsigned char>(text[pos])) &&
                       text[pos] != '>')
                    ++pos;
                attr.value = text.substr(val_start, pos - val_start);
            }
            attr.has_value = true;
        }
        out.push_back(std::move(attr));
    }
    return n;
}

std::optional<std::string> attr_value(const std::vector<Attr>& attrs, const std::string& name) {
    for (const auto& a : attrs)
        if (a.name == name && a.has_value) return a.value;
    return std::nullopt;
}

bool attr_present(const std::vector<Attr>& attrs, const std::string& name) {
    for (const auto& a : attrs)
        if (a.name == name) return true;
    return false;
}

// Pulls a URL out of a <meta content=...> value, handling the
// "0;url=http://..." refresh form.
std::optional<std::string> meta_url(const std::string& content) {
    const std::string lower = to_lower(content);
    const std::size_t url_at = lower.find("url=");
    if (url_at != std::string::npos) return trim(content.substr(url_at + 4));
    if (lower.find("://") != std::string::npos) return trim(content);
    return std::nullopt;
}

bool has_scheme_prefix(const std::string& href) {
    for (std::size_t i = 0; i < href.size(); ++i) {
        const char c = href[i];
        if (c == ':') return i > 0;
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            return false;
    }
    return false;
}

bool same_document(const UrlParts& a, const UrlParts& b) {
    auto norm_path = [](const std::string& p) { return p.empty() ? std::string("/") : p; };
    return a.scheme == b.scheme && a.host == b.host && a.port == b.port &&
           norm_path(a.path) == norm_path(b.path) && a.query == b.query;
}

const std::vector<std::string>& null_href_set() {
    static const std::vector<std::string> hrefs = {
        "", "#", "#content", "javascript:void(0)", "javascript:;",
    };
    return hrefs;
}

// Resolves a form action to a scheme, inheriting the page scheme for
// relative and protocol-relative actions.
std::string action_scheme(const std::string& action, const UrlParts& base) {
    const std::string a = trim(action);
    if (a.rfind("//", 0) == 0) return base.scheme;
    if (has_scheme_prefix(a)) {
        const std::size_t colon = a.find(':');
        return to_lower(a.substr(0, colon));
    }
    return base.scheme;
}

} // namespace

const std::vector<std::string>& content_feature_names() {
    static const std::vector<std::string> names = {
        "PctExtHyperlinks",
        "PctNullSelfRedirectHyperlinks",
        "PctExtResourceUrls",
        "FrequentDomainNameMismatch",
        "SubmitInfoToEmail",
        "InsecureForms",
        "IframeOrFrame",
        "AbnormalFormAction",
        "PctExtNullSelfRedirectHyperlinksRT",
        "ExtMetaScriptLinkRT",
        "AbnormalExtFormActionR",
    };
    return names;
}

std::vector<double> content_feature_values(const ContentFeatureSet& f) {
    return {
        f.pct_ext_hyperlinks,
        f.pct_null_self_redirect_hyperlinks,
        f.pct_ext_resource_urls,
        static_cast<double>(f.frequent_domain_name_mismatch),
        static_cast<double>(f.submit_info_to_email),
        static_cast<double>(f.insecure_forms),
        static_cast<double>(f.iframe_or_frame),
        static_cast<double>(f.abnormal_form_action),
        static_cast<double>(f.pct_ext_null_self_redirect_hyperlinks_rt),
        static_cast<double>(f.ext_meta_script_link_rt),
        static_cast<double>(f.abnormal_ext_form_action_r),
    };
}

TagInventory scan_document(const HtmlDocument& doc) {
    TagInventory inv;
    const std::string& text = doc.markup;
    const std::size_t n = text.size();
    std::size_t pos = 0;

    while (pos < n) {
        const std::size_t lt = text.find('<', pos);
        if (lt == std::string::npos) break;
        pos = lt + 1;
        if (pos >= n) break;

        if (text.compare(lt, 4, "<!--") == 0) {
            const std::size_t end = text.find("-->", lt + 4);
            pos = end == std::string::npos ? n : end + 3;
            continue;
        }
        if (text[pos] == '/' || text[pos] == '!' || text[pos] == '?') {
            const std::size_t gt = text.find('>', pos);
            pos = gt == std::string::npos ? n : gt + 1;
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(text[pos]))) {
            ++inv.skipped_constructs;
            continue;
        }

        const std::size_t name_start = pos;
        while (pos < n && is_name_char(text[pos])) ++pos;
        const std::string tag = to_lower(text.substr(name_start, pos - name_start));

        std::vector<Attr> attrs;
        pos = parse_attrs(text, pos, attrs);

        if (tag == "a") {
            if (auto href = attr_value(attrs, "href"); href || attr_present(attrs, "href"))
                inv.anchors.push_back(href.value_or(""));
        } else if (tag == "form") {
            FormRef form;
            form.action = attr_value(attrs, "action").value_or("");
            form.method = to_lower(attr_value(attrs, "method").value_or("get"));
            inv.forms.push_back(std::move(form));
        } else if (tag == "iframe" || tag == "frame") {
            ++inv.iframes_or_frames;
        } else if (tag == "script") {
            if (auto src = attr_value(attrs, "src")) inv.resource_refs.push_back(*src);
        } else if (tag == "link") {
            if (auto href = attr_value(attrs, "href")) inv.resource_refs.push_back(*href);
        } else if (tag == "meta") {
            if (auto content = attr_value(attrs, "content"))
                if (auto url = meta_url(*content)) inv.resource_refs.push_back(*url);
        }
    }
    return inv;
}

HyperlinkClass classify_hyperlink(const std::string& href_in, const UrlParts& base) {
    const std::string href = trim(href_in);
    const std::string lower = to_lower(href);
    for (const auto& null_href : null_href_set())
        if (lower == null_href) return HyperlinkClass::NullSelf;

    const bool protocol_relative = href.rfind("//", 0) == 0;
    if (!protocol_relative && !has_scheme_prefix(href)) return HyperlinkClass::Internal;

    try {
        const UrlParts parts =
            parse_url(protocol_relative ? base.scheme + ":" + href : href);
        if (same_document(parts, base)) return HyperlinkClass::NullSelf;
        return parts.registered_domain == base.registered_domain ? HyperlinkClass::Internal
                                                                 : HyperlinkClass::External;
    } catch (const Error&) {
        return HyperlinkClass::External; // unparseable absolute: assume external
    }
}

ContentFeatureSet extract_content_features(const HtmlDocument& doc,
                                           const TagInventory& inv,
                                           const RtConfig& rt) {
    ContentFeatureSet f;

    int external = 0;
    int null_self = 0;
    std::map<std::string, int> anchor_domains;
    for (const auto& href : inv.anchors) {
        switch (classify_hyperlink(href, doc.page_url)) {
        case HyperlinkClass::External: ++external; break;
        case HyperlinkClass::NullSelf: ++null_self; break;
        case HyperlinkClass::Internal: break;
        }
        const std::string trimmed = trim(href);
        if (trimmed.rfind("//", 0) == 0 || has_scheme_prefix(trimmed)) {
            try {
                const UrlParts parts = parse_url(
                    trimmed.rfind("//", 0) == 0 ? doc.page_url.scheme + ":" + trimmed : trimmed);
                ++anchor_domains[parts.registered_domain];
            } catch (const Error&) {
            }
        }
    }
    const double anchor_count = static_cast<double>(inv.anchors.size());
    if (anchor_count > 0) {
        f.pct_ext_hyperlinks = external / anchor_count;
        f.pct_null_self_redirect_hyperlinks = null_self / anchor_count;
    }

    int ext_resources = 0;
    for (const auto& ref : inv.resource_refs)
        if (classify_hyperlink(ref, doc.page_url) == HyperlinkClass::External) ++ext_resources;
    if (!inv.resource_refs.empty())
        f.pct_ext_resource_urls = ext_resources / static_cast<double>(inv.resource_refs.size());

    bool any_abnormal = false;
    bool any_external_action = false;
    for (const auto& form : inv.forms) {
        const std::string action = trim(form.action);
        const std::string action_lower = to_lower(action);

        if (action_lower.rfind("mailto:", 0) == 0) f.submit_info_to_email = 1;
        if (action_scheme(action, doc.page_url) == "http") f.insecure_forms = 1;
        if (action_lower == "" || action_lower == "#" || action_lower == "about:blank" ||
            action_lower == "javascript:true")
            any_abnormal = true;
        else if (action_lower.rfind("//", 0) == 0 || has_scheme_prefix(action)) {
            try {
                const UrlParts parts = parse_url(action_lower.rfind("//", 0) == 0
                                                     ? doc.page_url.scheme + ":" + action
                                                     : action);
                if (parts.registered_domain != doc.page_url.registered_domain)
                    any_external_action = true;
            } catch (const Error&) {
                any_external_action = true; // mailto:, unparseable: not this site
            }
        }
    }
    f.abnormal_form_action = any_abnormal ? 1 : 0;
    f.iframe_or_frame = inv.iframes_or_frames > 0 ? 1 : 0;

    // Mismatch when the most common registered domain among absolute anchor
    // targets is not the page's own domain.
    if (!anchor_domains.empty()) {
        int best = 0;
        for (const auto& [domain, count] : anchor_domains) best = std::max(best, count);
        const auto self = anchor_domains.find(doc.page_url.registered_domain);
        const int self_count = self == anchor_domains.end() ? 0 : self->second;
        f.frequent_domain_name_mismatch = self_count < best ? 1 : 0;
    }

    f.pct_ext_null_self_redirect_hyperlinks_rt = apply_rt_thresholds(
        f.pct_ext_hyperlinks + f.pct_null_self_redirect_hyperlinks, rt.pct);
    f.ext_meta_script_link_rt = apply_rt_thresholds(f.pct_ext_resource_urls, rt.pct);

    // Three-state form summary: abnormal beats external beats normal.
    f.abnormal_ext_form_action_r = any_abnormal ? 1 : (any_external_action ? 0 : -1);
    return f;
}

} // namespace phishlens
