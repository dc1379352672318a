#pragma once

#include <string>
#include <vector>

namespace igr {

// Dominant weight of GL_k: a nonincreasing vector of k integers.
class GLWeight {
public:
    GLWeight() = default;
    explicit GLWeight(std::vector<int> entries);
    GLWeight(std::initializer_list<int> entries);

    static GLWeight constant(int k, int value);

    int rank() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }
    int sum() const;

    // (-lambda_k, ..., -lambda_1); an involution on dominant weights.
    GLWeight dual() const;
    // lambda + (l, ..., l)
    GLWeight shifted(int l) const;

    bool operator==(const GLWeight&) const = default;
    std::string str() const;  // "[a,b,c]"

private:
    std::vector<int> entries_;
};

// Componentwise partial order: mu_i <= lambda_i for all i.
bool leq_inclusion(const GLWeight& mu, const GLWeight& lambda);

// Strict total order: lexicographic with entries read from right to left.
// Refines leq_inclusion; equal weights compare equal (irreflexive).
bool lex_less(const GLWeight& beta, const GLWeight& alpha);

struct LexLess {
    bool operator()(const GLWeight& a, const GLWeight& b) const { return lex_less(a, b); }
};

// Dominant weight of Sp_2n: nonincreasing, all entries >= 0.
class SpWeight {
public:
    SpWeight() = default;
    explicit SpWeight(std::vector<int> entries);

    static SpWeight zero(int n);

    int rank() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }
    bool is_zero() const;

    bool operator==(const SpWeight&) const = default;
    std::string str() const;

private:
    std::vector<int> entries_;
};

// U^lambda(t).  The twist is stored absorbed: U^lambda(t) == U^{lambda+(t,..,t)}.
// The display pair (lambda, t) is kept so printing round-trips bit-exactly.
class TwistedBundle {
public:
    TwistedBundle() = default;
    TwistedBundle(GLWeight weight, int twist);
    explicit TwistedBundle(GLWeight weight) : TwistedBundle(std::move(weight), 0) {}

    int rank() const { return absorbed_.rank(); }
    const GLWeight& absorbed() const { return absorbed_; }
    GLWeight display_weight() const { return absorbed_.shifted(-display_twist_); }
    int display_twist() const { return display_twist_; }

    TwistedBundle twist(int l) const;
    TwistedBundle dual() const;

    // Equality and ordering are on the absorbed weight only.
    bool operator==(const TwistedBundle& o) const { return absorbed_ == o.absorbed_; }
    bool operator<(const TwistedBundle& o) const;

    // Prints the stored display pair verbatim: "U[a,b,c]" or "U[a,b,c](t)".
    std::string str() const;
    // Re-expressed as U[a,0,-b](t) whenever the inner entries share a common
    // value t; otherwise falls back to the raw absorbed weight.
    std::string canonical_str() const;

private:
    GLWeight absorbed_;
    int display_twist_ = 0;
};

// Parses "U[a,b,c]" with optional "(t)" suffix.  Throws std::invalid_argument.
TwistedBundle parse_bundle(const std::string& text);

}  // namespace igr
