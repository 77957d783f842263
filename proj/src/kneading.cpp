#include "lorenz/kneading.hpp"

#include "lorenz/error.hpp"

#include <limits>
#include <numeric>

namespace lorenz {

namespace {

std::string primitive_root(const std::string& w)
{
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) {
            continue;
        }
        bool repeats = true;
        for (std::size_t i = d; i < n && repeats; ++i) {
            repeats = w[i] == w[i - d];
        }
        if (repeats) {
            return w.substr(0, d);
        }
    }
    return w;
}

void check_bits(const std::string& w)
{
    for (char ch : w) {
        if (ch != '0' && ch != '1') {
            throw LorenzError(ErrorKind::ConfigParse, "kneading word must be binary: '" + w + "'");
        }
    }
}

} // namespace

KneadingWord KneadingWord::periodic(std::string prefix, std::string period)
{
    check_bits(prefix);
    check_bits(period);
    if (period.empty()) {
        throw LorenzError(ErrorKind::ConfigParse, "empty period");
    }
    KneadingWord w;
    w.period_ = primitive_root(period);
    w.prefix_ = std::move(prefix);
    while (!w.prefix_.empty() && w.prefix_.back() == w.period_.back()) {
        w.period_ = w.period_.back() + w.period_.substr(0, w.period_.size() - 1);
        w.prefix_.pop_back();
    }
    return w;
}

KneadingWord KneadingWord::truncated_word(std::string bits)
{
    check_bits(bits);
    KneadingWord w;
    w.prefix_ = std::move(bits);
    w.truncated_ = true;
    return w;
}

KneadingWord KneadingWord::parse(const std::string& text)
{
    auto open = text.find('(');
    if (open == std::string::npos) {
        std::string bits = text;
        if (bits.size() >= 3 && bits.compare(bits.size() - 3, 3, "...") == 0) {
            bits.resize(bits.size() - 3);
        }
        return truncated_word(bits);
    }
    auto close = text.find(')', open);
    if (close == std::string::npos) {
        throw LorenzError(ErrorKind::ConfigParse, "unbalanced kneading word '" + text + "'");
    }
    std::string tail = text.substr(close + 1);
    if (tail != "*" && !tail.empty()) {
        throw LorenzError(ErrorKind::ConfigParse, "trailing text in kneading word '" + text + "'");
    }
    return periodic(text.substr(0, open), text.substr(open + 1, close - open - 1));
}

std::size_t KneadingWord::known() const
{
    return truncated_ ? prefix_.size() : std::numeric_limits<std::size_t>::max();
}

int KneadingWord::bit(std::size_t i) const
{
    if (i < prefix_.size()) {
        return prefix_[i] - '0';
    }
    if (truncated_) {
        throw LorenzError(ErrorKind::OutOfBound, "bit beyond a truncated kneading word");
    }
    return period_[(i - prefix_.size()) % period_.size()] - '0';
}

KneadingWord KneadingWord::shift(std::size_t n) const
{
    KneadingWord w = *this;
    if (n <= prefix_.size()) {
        w.prefix_ = prefix_.substr(n);
        return w;
    }
    if (truncated_) {
        w.prefix_.clear();
        return w;
    }
    std::size_t k = (n - prefix_.size()) % period_.size();
    w.prefix_.clear();
    w.period_ = period_.substr(k) + period_.substr(0, k);
    return w;
}

std::string KneadingWord::to_string() const
{
    if (truncated_) {
        return prefix_ + "...";
    }
    return prefix_ + "(" + period_ + ")*";
}

std::string KneadingWord::take(std::size_t n) const
{
    std::string out;
    for (std::size_t i = 0; i < n && i < known(); ++i) {
        out.push_back(static_cast<char>('0' + bit(i)));
    }
    return out;
}

std::optional<int> compare_words(const KneadingWord& a, const KneadingWord& b)
{
    std::size_t horizon;
    if (a.truncated() || b.truncated()) {
        horizon = std::min(a.known(), b.known());
    } else {
        horizon = a.prefix().size() + b.prefix().size() + std::lcm(a.period().size(), b.period().size());
    }
    for (std::size_t i = 0; i < horizon; ++i) {
        int x = a.bit(i);
        int y = b.bit(i);
        if (x != y) {
            return x < y ? -1 : 1;
        }
    }
    if (a.truncated() || b.truncated()) {
        return std::nullopt;
    }
    return 0;
}

bool operator==(const KneadingWord& a, const KneadingWord& b)
{
    auto c = compare_words(a, b);
    return c && *c == 0;
}

KneadingWord kneading_word(const LorenzMap& f, const SidedPoint& p, int horizon)
{
    Orbit o = orbit(f, p, horizon);
    const SidedPoint cp = f.c_plus();
    std::string bits;
    bits.reserve(o.points.size());
    for (const auto& q : o.points) {
        bits.push_back(q >= cp ? '1' : '0');
    }
    if (!o.recurrent()) {
        return KneadingWord::truncated_word(bits);
    }
    auto pre = static_cast<std::size_t>(*o.preperiod);
    return KneadingWord::periodic(bits.substr(0, pre), bits.substr(pre));
}

KneadingInvariant kneading_invariant(const LorenzMap& f, int horizon)
{
    return {kneading_word(f, f.c_plus(), horizon), kneading_word(f, f.c_minus(), horizon)};
}

std::string to_string(Admissibility a)
{
    switch (a) {
    case Admissibility::Admissible: return "admissible";
    case Admissibility::Inadmissible: return "inadmissible";
    case Admissibility::UndecidableTruncated: break;
    }
    return "undecidable-truncated";
}

AdmissibilityResult admissibility_check(const KneadingWord& k_plus, const KneadingWord& k_minus)
{
    AdmissibilityResult out;
    const KneadingWord sp = k_plus.shift(1);
    const KneadingWord sm = k_minus.shift(1);
    std::size_t n_max;
    if (k_plus.truncated() || k_minus.truncated()) {
        n_max = std::min(k_plus.known(), k_minus.known());
    } else {
        n_max = std::max(k_plus.prefix().size() + k_plus.period().size(),
                         k_minus.prefix().size() + k_minus.period().size());
    }
    bool undecided = k_plus.truncated() || k_minus.truncated();
    for (std::size_t n = 1; n <= n_max; ++n) {
        const KneadingWord a = k_plus.shift(n);
        const KneadingWord b = k_minus.shift(n);
        // sigma(k+) <= sigma^n(k+) < sigma(k-)
        auto c1 = compare_words(sp, a);
        auto c2 = compare_words(a, sm);
        // sigma(k+) < sigma^n(k-) <= sigma(k-)
        auto c3 = compare_words(sp, b);
        auto c4 = compare_words(b, sm);
        if ((c1 && *c1 > 0) || (c2 && *c2 >= 0)) {
            out.verdict = Admissibility::Inadmissible;
            out.witness = static_cast<int>(n);
            out.failed_chain = "plus";
            return out;
        }
        if ((c3 && *c3 >= 0) || (c4 && *c4 > 0)) {
            out.verdict = Admissibility::Inadmissible;
            out.witness = static_cast<int>(n);
            out.failed_chain = "minus";
            return out;
        }
        undecided = undecided || !c1 || !c2 || !c3 || !c4;
    }
    if (undecided) {
        out.verdict = Admissibility::UndecidableTruncated;
    }
    return out;
}

namespace {

// Decides whether w, read from position `start`, lies in {a, b}^inf.
class BlockGraph {
public:
    BlockGraph(const KneadingWord& w, const std::string& a, const std::string& b) : w_(w), blocks_{a, b}
    {
        states_ = w.prefix().size() + w.period().size();
        color_.assign(states_, 0);
    }

    bool infinite_path_from(std::size_t start) { return dfs(normalize(start)); }

private:
    std::size_t normalize(std::size_t i) const
    {
        std::size_t pre = w_.prefix().size();
        return i < pre ? i : pre + (i - pre) % w_.period().size();
    }

    bool matches(std::size_t i, const std::string& block) const
    {
        for (std::size_t j = 0; j < block.size(); ++j) {
            if (w_.bit(i + j) != block[j] - '0') {
                return false;
            }
        }
        return true;
    }

    bool dfs(std::size_t s)
    {
        if (color_[s] == 1) {
            return true;  // back edge: a cycle is reachable
        }
        if (color_[s] == 2) {
            return false;
        }
        color_[s] = 1;
        for (const auto& block : blocks_) {
            if (matches(s, block) && dfs(normalize(s + block.size()))) {
                return true;
            }
        }
        color_[s] = 2;
        return false;
    }

    const KneadingWord& w_;
    std::string blocks_[2];
    std::size_t states_ = 0;
    std::vector<int> color_;
};

bool starts_with(const KneadingWord& w, std::size_t at, const std::string& block)
{
    for (std::size_t j = 0; j < block.size(); ++j) {
        if (w.bit(at + j) != block[j] - '0') {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<Factorization> renorm_factorization(const KneadingWord& k_plus, const KneadingWord& k_minus, int l_max,
                                                int r_max)
{
    std::vector<Factorization> out;
    if (k_plus.truncated() || k_minus.truncated()) {
        return out;
    }
    for (int l = 2; l <= l_max; ++l) {
        for (int r = 2; r <= r_max; ++r) {
            std::string wm = k_minus.take(static_cast<std::size_t>(l));
            std::string wp = k_plus.take(static_cast<std::size_t>(r));
            auto ul = static_cast<std::size_t>(l);
            auto ur = static_cast<std::size_t>(r);
            if (!starts_with(k_plus, ur, wm) || !starts_with(k_minus, ul, wp)) {
                continue;
            }
            BlockGraph gp(k_plus, wm, wp);
            BlockGraph gm(k_minus, wm, wp);
            if (gp.infinite_path_from(ur + ul) && gm.infinite_path_from(ul + ur)) {
                out.push_back({l, r, wm, wp});
            }
        }
    }
    return out;
}

} // namespace lorenz
