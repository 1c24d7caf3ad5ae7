#include "sgm/spec_text.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sgm::spec_text {

namespace {

struct Entry {
    std::string value;
    int line = 0;
    bool used = false;
};

using Section = std::map<std::string, Entry>;

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    std::ostringstream os;
    os << "spec file " << origin;
    if (line > 0) os << " line " << line;
    os << ": " << msg;
    throw std::runtime_error(os.str());
}

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_number(const std::string& origin, int line, const std::string& key,
                    const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        fail(origin, line, "value of '" + key + "' is not a number: '" + text + "'");
    return v;
}

class SpecDoc {
public:
    SpecDoc(const std::string& text, std::string origin) : origin_(std::move(origin)) {
        std::istringstream in(text);
        std::string raw;
        std::string section;
        int line = 0;
        while (std::getline(in, raw)) {
            ++line;
            const auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            const std::string s = trim(raw);
            if (s.empty()) continue;
            if (s.front() == '[') {
                if (s.back() != ']') fail(origin_, line, "unterminated section header");
                section = trim(s.substr(1, s.size() - 2));
                if (section != "space" && section != "phi" && section != "modulus" &&
                    section != "coefficients" && section != "xi")
                    fail(origin_, line, "unknown section [" + section + "]");
                sections_[section];
                continue;
            }
            const auto eq = s.find('=');
            if (eq == std::string::npos) fail(origin_, line, "expected key = value");
            if (section.empty()) fail(origin_, line, "key appears before any [section]");
            const std::string key = trim(s.substr(0, eq));
            const std::string value = trim(s.substr(eq + 1));
            if (key.empty()) fail(origin_, line, "empty key");
            if (value.empty()) fail(origin_, line, "empty value for '" + key + "'");
            auto& sec = sections_[section];
            if (sec.count(key)) fail(origin_, line, "duplicate key '" + key + "'");
            sec[key] = Entry{value, line, false};
        }
    }

    bool has(const std::string& section, const std::string& key) const {
        const auto it = sections_.find(section);
        return it != sections_.end() && it->second.count(key) > 0;
    }

    std::string get_string(const std::string& section, const std::string& key) {
        auto sit = sections_.find(section);
        if (sit == sections_.end()) fail(origin_, 0, "missing section [" + section + "]");
        auto kit = sit->second.find(key);
        if (kit == sit->second.end())
            fail(origin_, 0, "missing key '" + key + "' in [" + section + "]");
        kit->second.used = true;
        return kit->second.value;
    }

    double get_number(const std::string& section, const std::string& key) {
        auto sit = sections_.find(section);
        if (sit == sections_.end()) fail(origin_, 0, "missing section [" + section + "]");
        auto kit = sit->second.find(key);
        if (kit == sit->second.end())
            fail(origin_, 0, "missing key '" + key + "' in [" + section + "]");
        kit->second.used = true;
        return parse_number(origin_, kit->second.line, key, kit->second.value);
    }

    double get_number_or(const std::string& section, const std::string& key, double fallback) {
        if (!has(section, key)) return fallback;
        return get_number(section, key);
    }

    std::vector<double> get_number_list(const std::string& section, const std::string& key) {
        std::string text = get_string(section, key);
        const int line = sections_.at(section).at(key).line;
        for (auto& ch : text)
            if (ch == ',') ch = ' ';
        std::istringstream in(text);
        std::vector<double> out;
        std::string tok;
        while (in >> tok) out.push_back(parse_number(origin_, line, key, tok));
        if (out.empty()) fail(origin_, line, "empty list for '" + key + "'");
        return out;
    }

    void reject_unused() const {
        for (const auto& [section, entries] : sections_)
            for (const auto& [key, entry] : entries)
                if (!entry.used)
                    fail(origin_, entry.line,
                         "unknown key '" + key + "' in [" + section + "]");
    }

    const std::string& origin() const { return origin_; }

private:
    std::string origin_;
    std::map<std::string, Section> sections_;
};

} // namespace

process::ProcessSpec parse_spec_text(const std::string& text, const std::string& origin) {
    SpecDoc doc(text, origin);

    process::FamilyOptions opt;
    opt.T = doc.get_number("space", "T");
    opt.zeta = doc.get_number("phi", "zeta");
    opt.alpha = doc.get_number("modulus", "alpha");
    opt.mod_C = doc.get_number_or("modulus", "C", -1.0);
    opt.entropy_a = doc.get_number_or("coefficients", "entropy_a", -1.0);
    opt.coef_error = doc.get_number_or("coefficients", "coef_error", 0.0);

    const std::string dist = doc.has("xi", "dist") ? doc.get_string("xi", "dist") : "gaussian";
    if (dist == "gaussian") {
        opt.dist = orlicz::CoefDist::StandardGaussian;
        opt.dist_param = doc.get_number_or("xi", "scale", 1.0);
    } else if (dist == "bounded") {
        opt.dist = orlicz::CoefDist::SymmetricBounded;
        opt.dist_param = doc.get_number_or("xi", "halfwidth", 1.0);
    } else {
        fail(origin, 0, "unknown coefficient distribution '" + dist + "'");
    }

    const std::string family = doc.get_string("coefficients", "family");
    process::ProcessSpec spec;
    if (family == "wiener-kl") {
        doc.reject_unused();
        spec = process::make_wiener_kl(opt);
    } else if (family == "damped-trig") {
        const double q = doc.get_number("coefficients", "q");
        const double amp = doc.get_number_or("coefficients", "amp", 1.0);
        doc.reject_unused();
        spec = process::make_damped_trig(opt, q, amp);
    } else if (family == "finite") {
        const auto terms = doc.get_number_list("coefficients", "terms");
        doc.reject_unused();
        spec = process::make_finite(opt, terms);
    } else {
        fail(origin, 0, "unknown family '" + family + "'");
    }
    return spec;
}

process::ProcessSpec parse_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("spec file " + path + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str(), path);
}

} // namespace sgm::spec_text
