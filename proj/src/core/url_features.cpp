#include "core/url_features.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "core/error.hpp"

namespace phishlens {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string last_two_labels(const std::string& host) {
    const std::size_t last = host.rfind('.');
    if (last == std::string::npos) return host;
    const std::size_t prev = host.rfind('.', last == 0 ? 0 : last - 1);
    if (prev == std::string::npos) return host;
    return host.substr(prev + 1);
}

} // namespace

bool is_dotted_quad(const std::string& host) {
    int label = 0;
    int value = 0;
    int digits = 0;
    for (char c : host) {
        if (c == '.') {
            if (digits == 0 || value > 255) return false;
            ++label;
            value = 0;
            digits = 0;
        } else if (c >= '0' && c <= '9') {
            value = value * 10 + (c - '0');
            if (++digits > 3 || value > 255) return false;
        } else {
            return false;
        }
    }
    return label == 3 && digits > 0 && value <= 255;
}

UrlParts parse_url(const std::string& raw_in) {
    const std::string raw = trim(raw_in);
    if (raw.empty()) raise(ErrorCode::MalformedUrl, "empty URL");

    const std::size_t sep = raw.find("://");
    if (sep == std::string::npos)
        raise(ErrorCode::MalformedUrl, "no scheme in '" + raw + "'");

    UrlParts parts;
    parts.scheme = to_lower(raw.substr(0, sep));
    if (parts.scheme != "http" && parts.scheme != "https")
        raise(ErrorCode::MalformedUrl, "unsupported scheme '" + parts.scheme + "'");

    std::string rest = raw.substr(sep + 3);

    const std::size_t frag = rest.find('#');
    if (frag != std::string::npos) {
        parts.fragment = rest.substr(frag + 1);
        rest = rest.substr(0, frag);
    }

    std::string query_text;
    const std::size_t q = rest.find('?');
    if (q != std::string::npos) {
        query_text = rest.substr(q + 1);
        rest = rest.substr(0, q);
    }

    std::string authority = rest;
    const std::size_t slash = rest.find('/');
    if (slash != std::string::npos) {
        authority = rest.substr(0, slash);
        parts.path = rest.substr(slash);
    }

    const std::size_t at = authority.rfind('@');
    if (at != std::string::npos) {
        parts.has_userinfo = true;
        authority = authority.substr(at + 1);
    }

    const std::size_t colon = authority.rfind(':');
    if (colon != std::string::npos) {
        const std::string port_text = authority.substr(colon + 1);
        authority = authority.substr(0, colon);
        if (port_text.empty() ||
            !std::all_of(port_text.begin(), port_text.end(),
                         [](unsigned char c) { return std::isdigit(c); }))
            raise(ErrorCode::MalformedUrl, "bad port '" + port_text + "'");
        parts.port = std::stoi(port_text);
    }

    parts.host = to_lower(authority);
    if (parts.host.empty())
        raise(ErrorCode::MalformedUrl, "empty host in '" + raw + "'");

    parts.registered_domain =
        is_dotted_quad(parts.host) ? parts.host : last_two_labels(parts.host);

    if (!query_text.empty()) {
        std::size_t pos = 0;
        while (pos <= query_text.size()) {
            const std::size_t amp = query_text.find('&', pos);
            const std::string component =
                query_text.substr(pos, amp == std::string::npos ? std::string::npos : amp - pos);
            const std::size_t eq = component.find('=');
            if (eq == std::string::npos)
                parts.query.emplace_back(component, "");
            else
                parts.query.emplace_back(component.substr(0, eq), component.substr(eq + 1));
            if (amp == std::string::npos) break;
            pos = amp + 1;
        }
    }

    return parts;
}

std::string UrlParts::to_string() const {
    std::string out = scheme + "://" + host;
    if (port) out += ":" + std::to_string(*port);
    out += path;
    if (!query.empty()) {
        out += "?";
        for (std::size_t i = 0; i < query.size(); ++i) {
            if (i > 0) out += "&";
            out += query[i].first;
            if (!query[i].second.empty()) out += "=" + query[i].second;
        }
    }
    if (fragment) out += "#" + *fragment;
    return out;
}

BrandList::BrandList(std::vector<std::string> tokens) {
    for (auto& t : tokens) {
        t = to_lower(trim(t));
        if (!t.empty()) tokens_.push_back(t);
    }
}

BrandList BrandList::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::Io, "cannot open brand list '" + path + "'");
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) tokens.push_back(line);
    }
    return BrandList(std::move(tokens));
}

int apply_rt_thresholds(double value, double lo, double hi) {
    if (lo >= hi) raise(ErrorCode::InvalidThresholds, "rt thresholds need lo < hi");
    if (value <= lo) return -1;
    if (value <= hi) return 0;
    return 1;
}

const std::vector<std::string>& sensitive_word_list() {
    static const std::vector<std::string> words = {
        "secure", "account", "update", "login",
        "sign-in", "banking", "confirm", "verify",
    };
    return words;
}

int count_sensitive_words(const std::string& raw) {
    const std::string text = to_lower(raw);
    int count = 0;
    for (const auto& word : sensitive_word_list()) {
        std::size_t pos = text.find(word);
        while (pos != std::string::npos) {
            ++count;
            pos = text.find(word, pos + 1);
        }
    }
    return count;
}

const std::vector<std::string>& lexical_feature_names() {
    static const std::vector<std::string> names = {
        "NumDots",           "NumDash",        "NumDashInHostname", "NumNumericChars",
        "NumQueryComponents", "PathLevel",     "UrlLength",         "HostnameLength",
        "NumSensitiveWords", "AtSymbol",       "IpAddress",         "DomainInPaths",
        "EmbeddedBrandName", "UrlLengthRT",
    };
    return names;
}

std::vector<double> lexical_feature_values(const LexicalFeatureSet& f) {
    return {
        static_cast<double>(f.num_dots),
        static_cast<double>(f.num_dash),
        static_cast<double>(f.num_dash_in_hostname),
        static_cast<double>(f.num_numeric_chars),
        static_cast<double>(f.num_query_components),
        static_cast<double>(f.path_level),
        static_cast<double>(f.url_length),
        static_cast<double>(f.hostname_length),
        static_cast<double>(f.num_sensitive_words),
        static_cast<double>(f.at_symbol),
        static_cast<double>(f.ip_address),
        static_cast<double>(f.domain_in_paths),
        static_cast<double>(f.embedded_brand_name),
        static_cast<double>(f.url_length_rt),
    };
}

LexicalFeatureSet extract_lexical_features(const UrlParts& parts,
                                           const std::string& raw_in,
                                           const BrandList& brands,
                                           const RtConfig& rt) {
    const std::string raw = trim(raw_in);
    LexicalFeatureSet f;

    // Dots are counted past the scheme separator (authority + path + query).
    const std::size_t sep = raw.find("://");
    std::string after = sep == std::string::npos ? raw : raw.substr(sep + 3);
    const std::size_t frag = after.find('#');
    if (frag != std::string::npos) after = after.substr(0, frag);
    f.num_dots = static_cast<int>(std::count(after.begin(), after.end(), '.'));

    f.num_dash = static_cast<int>(std::count(raw.begin(), raw.end(), '-'));
    f.num_dash_in_hostname =
        static_cast<int>(std::count(parts.host.begin(), parts.host.end(), '-'));
    f.num_numeric_chars = static_cast<int>(std::count_if(
        raw.begin(), raw.end(), [](unsigned char c) { return std::isdigit(c); }));
    f.num_query_components = static_cast<int>(parts.query.size());

    int levels = 0;
    std::size_t pos = 0;
    while (pos < parts.path.size()) {
        const std::size_t next = parts.path.find('/', pos);
        const std::size_t len = (next == std::string::npos ? parts.path.size() : next) - pos;
        if (len > 0) ++levels;
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    f.path_level = levels;

    f.url_length = static_cast<int>(raw.size());
    f.hostname_length = static_cast<int>(parts.host.size());
    f.num_sensitive_words = count_sensitive_words(raw);

    const bool at_in_tail =
        parts.path.find('@') != std::string::npos ||
        std::any_of(parts.query.begin(), parts.query.end(), [](const auto& kv) {
            return kv.first.find('@') != std::string::npos ||
                   kv.second.find('@') != std::string::npos;
        });
    f.at_symbol = (parts.has_userinfo || at_in_tail) ? 1 : 0;
    f.ip_address = is_dotted_quad(parts.host) ? 1 : 0;

    const std::string path_lower = to_lower(parts.path);
    bool domain_in_path = !parts.registered_domain.empty() &&
                          path_lower.find(parts.registered_domain) != std::string::npos;
    for (const auto& brand : brands.tokens()) {
        if (domain_in_path) break;
        if (path_lower.find(brand) != std::string::npos) domain_in_path = true;
    }
    f.domain_in_paths = domain_in_path ? 1 : 0;

    // Brand token somewhere in the host but not inside the registered domain.
    bool embedded = false;
    for (const auto& brand : brands.tokens()) {
        if (parts.host.find(brand) != std::string::npos &&
            parts.registered_domain.find(brand) == std::string::npos) {
            embedded = true;
            break;
        }
    }
    f.embedded_brand_name = embedded ? 1 : 0;

    f.url_length_rt = apply_rt_thresholds(static_cast<double>(f.url_length), rt.url_length);
    return f;
}

} // namespace phishlens
