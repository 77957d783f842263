#pragma once

// Kneading words, the Hubbard-Sparrow admissibility test and renormalization
// detection by block factorization.

#include "lorenz/lorenzmap.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lorenz {

// Eventually periodic 0/1 word prefix(period)^inf, or a truncated finite
// prefix when no recurrence was observed.
class KneadingWord {
public:
    KneadingWord() = default;
    static KneadingWord periodic(std::string prefix, std::string period);
    static KneadingWord truncated_word(std::string bits);
    // Accepts "100101(01100101)*" and "1011..." (truncated).
    static KneadingWord parse(const std::string& text);

    [[nodiscard]] const std::string& prefix() const { return prefix_; }
    [[nodiscard]] const std::string& period() const { return period_; }
    [[nodiscard]] bool truncated() const { return truncated_; }
    // Number of bits known; unbounded words report SIZE_MAX.
    [[nodiscard]] std::size_t known() const;
    // Bit i; throws OutOfBound beyond a truncated word.
    [[nodiscard]] int bit(std::size_t i) const;
    [[nodiscard]] KneadingWord shift(std::size_t n) const;
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::string take(std::size_t n) const;

private:
    std::string prefix_;
    std::string period_;
    bool truncated_ = false;
};

// Lexicographic comparison; nullopt when truncation hides the answer.
std::optional<int> compare_words(const KneadingWord& a, const KneadingWord& b);
bool operator==(const KneadingWord& a, const KneadingWord& b);

struct KneadingInvariant {
    KneadingWord plus;   // k(c_+)
    KneadingWord minus;  // k(c_-)
};

KneadingWord kneading_word(const LorenzMap& f, const SidedPoint& p, int horizon);
KneadingInvariant kneading_invariant(const LorenzMap& f, int horizon);

enum class Admissibility { Admissible, Inadmissible, UndecidableTruncated };

struct AdmissibilityResult {
    Admissibility verdict = Admissibility::Admissible;
    std::optional<int> witness;  // first failing n
    std::string failed_chain;    // "plus" or "minus"
};

std::string to_string(Admissibility a);

AdmissibilityResult admissibility_check(const KneadingWord& k_plus, const KneadingWord& k_minus);

struct Factorization {
    int l = 0;
    int r = 0;
    std::string w_minus;
    std::string w_plus;
};

// Pairs with k_+ in w_+ w_- {w_-, w_+}^inf and k_- in w_- w_+ {w_-, w_+}^inf.
std::vector<Factorization> renorm_factorization(const KneadingWord& k_plus, const KneadingWord& k_minus, int l_max,
                                                int r_max);

} // namespace lorenz
