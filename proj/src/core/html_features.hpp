#pragma once

#include <string>
#include <vector>

#include "core/url_features.hpp"

namespace phishlens {

struct HtmlDocument {
    UrlParts page_url;
    std::string markup; // may be empty; never validated
};

struct FormRef {
    std::string action;
    std::string method; // lowercased, "get" when absent
};

// Result of the tolerant tag scan. Counts reflect the tags actually seen;
// malformed constructs are skipped and tallied in skipped_constructs.
struct TagInventory {
    std::vector<std::string> anchors;       // href values, document order
    std::vector<FormRef> forms;
    int iframes_or_frames = 0;
    std::vector<std::string> resource_refs; // script src, link href, meta url
    int skipped_constructs = 0;
};

enum class HyperlinkClass { Internal, External, NullSelf };

struct ContentFeatureSet {
    double pct_ext_hyperlinks = 0.0;
    double pct_null_self_redirect_hyperlinks = 0.0;
    double pct_ext_resource_urls = 0.0;
    int frequent_domain_name_mismatch = 0;
    int submit_info_to_email = 0;
    int insecure_forms = 0;
    int iframe_or_frame = 0;
    int abnormal_form_action = 0;
    int pct_ext_null_self_redirect_hyperlinks_rt = 0;
    int ext_meta_script_link_rt = 0;
    int abnormal_ext_form_action_r = 0;
};

const std::vector<std::string>& content_feature_names();
std::vector<double> content_feature_values(const ContentFeatureSet& f);

// Best-effort, case-insensitive scan for a/form/iframe/frame/meta/script/link
// tags. Never throws on arbitrary byte input.
TagInventory scan_document(const HtmlDocument& doc);

HyperlinkClass classify_hyperlink(const std::string& href, const UrlParts& base);

ContentFeatureSet extract_content_features(const HtmlDocument& doc,
                                           const TagInventory& inv,
                                           const RtConfig& rt = RtConfig{});

} // namespace phishlens
