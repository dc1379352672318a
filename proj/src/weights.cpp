#include "igr/weights.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace igr {

namespace {

void check_nonincreasing(const std::vector<int>& e, const char* what) {
    if (e.empty()) throw std::invalid_argument(std::string(what) + ": empty weight");
    for (size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i] < e[i + 1])
            throw std::invalid_argument(std::string(what) + ": entries must be nonincreasing");
}

std::string bracket_list(const std::vector<int>& e) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e[i];
    }
    os << ']';
    return os.str();
}

}  // namespace

GLWeight::GLWeight(std::vector<int> entries) : entries_(std::move(entries)) {
    check_nonincreasing(entries_, "GLWeight");
}

GLWeight::GLWeight(std::initializer_list<int> entries) : GLWeight(std::vector<int>(entries)) {}

GLWeight GLWeight::constant(int k, int value) {
    return GLWeight(std::vector<int>(static_cast<size_t>(k), value));
}

int GLWeight::sum() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

GLWeight GLWeight::dual() const {
    std::vector<int> e(entries_.rbegin(), entries_.rend());
    for (int& x : e) x = -x;
    return GLWeight(std::move(e));
}

GLWeight GLWeight::shifted(int l) const {
    std::vector<int> e = entries_;
    for (int& x : e) x += l;
    return GLWeight(std::move(e));
}

std::string GLWeight::str() const { return bracket_list(entries_); }

bool leq_inclusion(const GLWeight& mu, const GLWeight& lambda) {
    if (mu.rank() != lambda.rank())
        throw std::invalid_argument("leq_inclusion: rank mismatch");
    for (int i = 0; i < mu.rank(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

bool lex_less(const GLWeight& beta, const GLWeight& alpha) {
    if (beta.rank() != alpha.rank())
        throw std::invalid_argument("lex_less: rank mismatch");
    for (int i = beta.rank() - 1; i >= 0; --i) {
        if (beta[i] != alpha[i]) return beta[i] < alpha[i];
    }
    return false;
}

SpWeight::SpWeight(std::vector<int> entries) : entries_(std::move(entries)) {
    check_nonincreasing(entries_, "SpWeight");
    if (entries_.back() < 0)
        throw std::invalid_argument("SpWeight: entries must be nonnegative");
}

SpWeight SpWeight::zero(int n) { return SpWeight(std::vector<int>(static_cast<size_t>(n), 0)); }

bool SpWeight::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x == 0; });
}

std::string SpWeight::str() const { return bracket_list(entries_); }

TwistedBundle::TwistedBundle(GLWeight weight, int twist)
    : absorbed_(weight.shifted(twist)), display_twist_(twist) {}

TwistedBundle TwistedBundle::twist(int l) const {
    return TwistedBundle(display_weight(), display_twist_ + l);
}

TwistedBundle TwistedBundle::dual() const {
    return TwistedBundle(display_weight().dual(), -display_twist_);
}

bool TwistedBundle::operator<(const TwistedBundle& o) const {
    return absorbed_.entries() < o.absorbed_.entries();
}

std::string TwistedBundle::str() const {
    std::string s = "U" + display_weight().str();
    if (display_twist_ != 0) s += "(" + std::to_string(display_twist_) + ")";
    return s;
}

std::string TwistedBundle::canonical_str() const {
    const int k = rank();
    if (k >= 2) {
        // middle entries must agree on the value to pull out as the twist
        int t = absorbed_[1];
        bool uniform = true;
        for (int i = 1; i + 1 < k; ++i) uniform = uniform && absorbed_[i] == t;
        if (uniform && absorbed_[0] >= t && (k == 1 || absorbed_[k - 1] <= t)) {
            std::string s = "U" + absorbed_.shifted(-t).str();
            if (t != 0) s += "(" + std::to_string(t) + ")";
            return s;
        }
    }
    return "U" + absorbed_.str();
}

TwistedBundle parse_bundle(const std::string& text) {
    size_t pos = 0;
    auto fail = [&](const char* why) {
        throw std::invalid_argument("parse_bundle: " + std::string(why) + " in '" + text + "'");
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_int = [&]() -> int {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            fail("expected integer");
        return std::stoi(text.substr(start, pos - start));
    };

    skip_ws();
    if (pos >= text.size() || (text[pos] != 'U' && text[pos] != 'u')) fail("expected 'U'");
    ++pos;
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') fail("expected '['");
    ++pos;
    std::vector<int> entries;
    entries.push_back(parse_int());
    skip_ws();
    while (pos < text.size() && text[pos] == ',') {
        ++pos;
        entries.push_back(parse_int());
        skip_ws();
    }
    if (pos >= text.size() || text[pos] != ']') fail("expected ']'");
    ++pos;
    skip_ws();
    int twist = 0;
    if (pos < text.size() && text[pos] == '(') {
        ++pos;
        twist = parse_int();
        skip_ws();
        if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
        ++pos;
        skip_ws();
    }
    if (pos != text.size()) fail("trailing characters");
    return TwistedBundle(GLWeight(std::move(entries)), twist);
}

}  // namespace igr
