#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace phishlens {

// Decomposed http(s) URL. Produced by parse_url; hosts are lowercased and
// userinfo is stripped out of the authority into has_userinfo.
struct UrlParts {
    std::string scheme;
    std::string host;
    std::optional<int> port;
    std::string path;                                       // "" or starts with "/"
    std::vector<std::pair<std::string, std::string>> query; // ordered key/value pairs
    std::optional<std::string> fragment;
    std::string registered_domain;                          // last two host labels
    bool has_userinfo = false;

    std::string to_string() const;
};

// Parses an absolute http/https URL. Throws Error(MalformedUrl) when there
// is no scheme, the scheme is unsupported, or the host is empty; callers
// batching records are expected to skip and log such rows.
UrlParts parse_url(const std::string& raw);

bool is_dotted_quad(const std::string& host);

// Brand token list: one lowercase token per line, '#' starts a comment.
class BrandList {
public:
    BrandList() = default;
    explicit BrandList(std::vector<std::string> tokens);
    static BrandList load(const std::string& path);

    const std::vector<std::string>& tokens() const { return tokens_; }
    bool empty() const { return tokens_.empty(); }

private:
    std::vector<std::string> tokens_;
};

struct RtThresholds {
    double lo;
    double hi;
};

// Cut points for the ternary RT encodings. The fraction cuts apply to all
// percentage-valued features; the length cuts to the URL character count.
struct RtConfig {
    RtThresholds pct{0.30, 0.60};
    RtThresholds url_length{54.0, 75.0};
};

// value <= lo -> -1, lo < value <= hi -> 0, value > hi -> +1.
// Throws Error(InvalidThresholds) when lo >= hi.
int apply_rt_thresholds(double value, double lo, double hi);

inline int apply_rt_thresholds(double value, const RtThresholds& t) {
    return apply_rt_thresholds(value, t.lo, t.hi);
}

// Case-insensitive occurrence count of the eight sensitive words over the
// whole URL text.
int count_sensitive_words(const std::string& raw);
const std::vector<std::string>& sensitive_word_list();

struct LexicalFeatureSet {
    int num_dots = 0;
    int num_dash = 0;
    int num_dash_in_hostname = 0;
    int num_numeric_chars = 0;
    int num_query_components = 0;
    int path_level = 0;
    int url_length = 0;
    int hostname_length = 0;
    int num_sensitive_words = 0;
    int at_symbol = 0;
    int ip_address = 0;
    int domain_in_paths = 0;
    int embedded_brand_name = 0;
    int url_length_rt = 0;
};

// Canonical column order for lexical feature output.
const std::vector<std::string>& lexical_feature_names();
std::vector<double> lexical_feature_values(const LexicalFeatureSet& f);

LexicalFeatureSet extract_lexical_features(const UrlParts& parts,
                                           const std::string& raw,
                                           const BrandList& brands,
                                           const RtConfig& rt = RtConfig{});

} // namespace phishlens
