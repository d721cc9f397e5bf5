/*
 * Copyright 2026 The etog authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "etog/laws.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace etog {

WordPredicate negativeWords(const Valuation& v)
{
    return [v](std::span<const std::size_t> w) { return sign(v.spec(), valWord(v, w)) < 0; };
}

WordPredicate nonNegativeWords(const Valuation& v)
{
    return [v](std::span<const std::size_t> w) { return sign(v.spec(), valWord(v, w)) >= 0; };
}

namespace {

/** Words of one length, indexed by their base-k value (first letter most significant). */
ColorWord decode(std::size_t value, std::size_t length, std::size_t k)
{
    ColorWord w(length);
    for (std::size_t i = length; i-- > 0;) {
        w[i] = value % k;
        value /= k;
    }
    return w;
}

std::size_t power(std::size_t k, std::size_t e)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > (std::size_t{1} << 40) / std::max<std::size_t>(k, 1)) throw std::length_error("closure check too large");
        r *= k;
    }
    return r;
}

}

ClosureReport checkClosure(std::size_t alphabetSize, const WordPredicate& inP, std::size_t maxLen)
{
    if (alphabetSize == 0) throw std::invalid_argument("empty alphabet");
    ClosureReport report;
    report.maxLen = maxLen;
    const std::size_t k = alphabetSize;

    // table[len][value] = P(word)
    std::vector<std::vector<char>> table(maxLen + 1);
    for (std::size_t len = 1; len <= maxLen; ++len) {
        const std::size_t count = power(k, len);
        table[len].resize(count);
        for (std::size_t v = 0; v < count; ++v) table[len][v] = inP(decode(v, len, k)) ? 1 : 0;
    }

    for (std::size_t lu = 1; lu < maxLen; ++lu) {
        for (std::size_t lv = 1; lu + lv <= maxLen; ++lv) {
            const std::size_t shift = power(k, lv);
            for (std::size_t u = 0; u < table[lu].size(); ++u) {
                for (std::size_t v = 0; v < table[lv].size(); ++v) {
                    ++report.pairsChecked;
                    const bool pu = table[lu][u], pv = table[lv][v];
                    const bool puv = table[lu + lv][u * shift + v];
                    if (pu == pv && puv != pu) {
                        report.pass = false;
                        report.counterexample = ClosureCounterexample{
                            pu ? ClosureCounterexample::Kind::ConcatenationInside
                               : ClosureCounterexample::Kind::ConcatenationOutside,
                            decode(u, lu, k), decode(v, lv, k)};
                        return report;
                    }
                }
            }
        }
    }

    for (std::size_t len = 2; len <= maxLen; ++len) {
        for (std::size_t value = 0; value < table[len].size(); ++value) {
            const ColorWord w = decode(value, len, k);
            for (std::size_t r = 1; r < len; ++r) {
                ++report.shiftsChecked;
                std::size_t rotated = 0;
                for (std::size_t i = 0; i < len; ++i) rotated = rotated * k + w[(i + r) % len];
                if (table[len][rotated] != table[len][value]) {
                    report.pass = false;
                    report.counterexample =
                        ClosureCounterexample{ClosureCounterexample::Kind::CyclicShift, w, decode(rotated, len, k)};
                    return report;
                }
            }
        }
    }
    return report;
}

std::optional<std::vector<std::size_t>> factorizeWP(const WordPredicate& inP, std::span<const std::size_t> w)
{
    const std::size_t n = w.size();
    if (n == 0) return std::nullopt;
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> prev(n + 1, none);
    prev[0] = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (prev[i] != none && inP(w.subspan(i, j - i))) {
                prev[j] = i;
                break;
            }
        }
    }
    if (prev[n] == none) return std::nullopt;
    std::vector<std::size_t> cuts;
    for (std::size_t j = n; j > 0; j = prev[j]) cuts.push_back(j);
    std::reverse(cuts.begin(), cuts.end());
    return cuts;
}

// fairly mixing ------------------------------------------------------------------

namespace {

class Sampler
{
public:
    Sampler(std::size_t k, std::uint64_t seed) : k_(k), rng_(seed) {}

    ColorWord word(std::size_t minLen, std::size_t maxLen)
    {
        std::uniform_int_distribution<std::size_t> len(minLen, maxLen);
        std::uniform_int_distribution<std::size_t> letter(0, k_ - 1);
        ColorWord w(len(rng_));
        for (auto& c : w) c = letter(rng_);
        return w;
    }

    UPWord upWord(std::size_t maxLen) { return UPWord(word(0, maxLen), word(1, maxLen)); }

    bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

    std::size_t upTo(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n)(rng_); }

private:
    std::size_t k_;
    std::mt19937_64 rng_;
};

constexpr int kRejectionTries = 64;

ColorWord concat(const ColorWord& a, const ColorWord& b)
{
    ColorWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}

FairlyMixingReport checkFairlyMixing(std::size_t alphabetSize, const UpPredicate& inW,
                                     const FairlyMixingOptions& options,
                                     const std::function<std::string(const ColorWord&)>& format)
{
    if (alphabetSize == 0) throw std::invalid_argument("empty alphabet");
    if (options.maxLen == 0) throw std::invalid_argument("maxLen must be positive");
    auto show = [&](const ColorWord& w) {
        if (format) return "'" + format(w) + "'";
        std::string s = "'";
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
        return s + "'";
    };
    auto showUp = [&](const UPWord& u) { return show(u.prefix) + "(" + show(u.period) + ")^w"; };

    FairlyMixingReport report;
    Sampler rng(alphabetSize, options.seed);
    const std::size_t L = options.maxLen;

    // (A)  x.alpha not in W and x.beta in W  =>  alpha not in W and beta in W
    for (std::size_t n = 0; n < options.samples; ++n) {
        auto& verdict = report.prefixCondition;
        ++verdict.instances;
        const ColorWord x = rng.word(0, L);
        const UPWord alpha = rng.upWord(L), beta = rng.upWord(L);
        const UPWord xAlpha(concat(x, alpha.prefix), alpha.period), xBeta(concat(x, beta.prefix), beta.period);
        if (inW(xAlpha) || !inW(xBeta)) continue;
        ++verdict.nonVacuous;
        if (!inW(alpha) && inW(beta)) continue;
        if (verdict.pass) {
            verdict.pass = false;
            verdict.counterexample = "x=" + show(x) + " alpha=" + showUp(alpha) + " beta=" + showUp(beta);
        }
    }

    // (B)  x^w in S and alpha in S  =>  x.alpha in S,   S in {W, complement}
    for (std::size_t n = 0; n < options.samples; ++n) {
        auto& verdict = report.prefixPeriodCondition;
        ++verdict.instances;
        const bool sIsW = rng.coin();
        auto inS = [&](const UPWord& u) { return inW(u) == sIsW; };
        ColorWord x;
        UPWord alpha;
        bool found = false;
        for (int t = 0; t < kRejectionTries && !found; ++t) {
            x = rng.word(1, L);
            found = inS(UPWord({}, x));
        }
        if (!found) continue;
        found = false;
        for (int t = 0; t < kRejectionTries && !found; ++t) {
            alpha = rng.upWord(L);
            found = inS(alpha);
        }
        if (!found) continue;
        ++verdict.nonVacuous;
        if (inS(UPWord(concat(x, alpha.prefix), alpha.period))) continue;
        if (verdict.pass) {
            verdict.pass = false;
            verdict.counterexample = std::string(sIsW ? "S=W" : "S=complement") + " x=" + show(x) + " alpha=" + showUp(alpha);
        }
    }

    // (C)  restricted to x1..x2m followed by (u, v) repeated
    for (std::size_t n = 0; n < options.samples; ++n) {
        auto& verdict = report.interleaving;
        ++verdict.instances;
        const bool sIsW = rng.coin();
        auto inS = [&](const UPWord& u) { return inW(u) == sIsW; };
        const std::size_t pairs = rng.upTo(options.maxPairs);
        std::vector<ColorWord> blocks;
        bool ok = true;
        for (std::size_t b = 0; b < 2 * pairs + 2 && ok; ++b) {
            bool found = false;
            ColorWord x;
            for (int t = 0; t < kRejectionTries && !found; ++t) {
                x = rng.word(1, L);
                found = inS(UPWord({}, x));
            }
            ok = found;
            blocks.push_back(std::move(x));
        }
        if (!ok) continue;
        const ColorWord& u = blocks[2 * pairs];
        const ColorWord& v = blocks[2 * pairs + 1];
        ColorWord odd, even, all;
        for (std::size_t i = 0; i < 2 * pairs; ++i) {
            (i % 2 == 0 ? odd : even).insert((i % 2 == 0 ? odd : even).end(), blocks[i].begin(), blocks[i].end());
            all.insert(all.end(), blocks[i].begin(), blocks[i].end());
        }
        const UPWord oddSeq(odd, u), evenSeq(even, v), full(all, concat(u, v));
        if (!inS(oddSeq) || !inS(evenSeq)) continue;
        ++verdict.nonVacuous;
        if (inS(full)) continue;
        if (verdict.pass) {
            verdict.pass = false;
            std::string blocksText;
            for (std::size_t i = 0; i < 2 * pairs; ++i) blocksText += " x" + std::to_string(i + 1) + "=" + show(blocks[i]);
            verdict.counterexample = std::string(sIsW ? "S=W" : "S=complement") + blocksText + " tail u=" + show(u) +
                                     " v=" + show(v) + ": odd and even interleavings in S, x1x2...(uv)^w is not";
        }
    }
    return report;
}

FairlyMixingReport checkFairlyMixing(const Condition& cond, const FairlyMixingOptions& options)
{
    const auto& names = colors(cond);
    return checkFairlyMixing(
        names.size(), [&cond](const UPWord& w) { return upMember(cond, w); }, options,
        [&names](const ColorWord& w) {
            std::string s;
            for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + names[w[i]];
            return s;
        });
}

// invariant sub-semigroups ------------------------------------------------------------

std::vector<FreeWord> enumerateGroupWords(std::size_t alphabetSize, std::size_t maxLen)
{
    std::vector<FreeWord> out{FreeWord{}};
    std::size_t levelStart = 0;
    for (std::size_t len = 1; len <= maxLen; ++len) {
        const std::size_t levelEnd = out.size();
        for (std::size_t i = levelStart; i < levelEnd; ++i) {
            for (std::size_t g = 0; g < alphabetSize; ++g) {
                for (int e : {1, -1}) {
                    const Letter l{static_cast<std::uint32_t>(g), static_cast<std::int8_t>(e)};
                    const auto& ls = out[i].letters();
                    if (!ls.empty() && ls.back().cancels(l)) continue;
                    out.push_back(out[i] * FreeWord::generator(l.gen, l.exp));
                }
            }
        }
        levelStart = levelEnd;
    }
    return out;
}

GroupElement valGroupWord(const Valuation& v, const FreeWord& word)
{
    const auto& spec = v.spec();
    GroupElement acc = identity(spec);
    for (const Letter& l : word.letters()) {
        const GroupElement& img = v.image(l.gen);
        acc = compose(spec, acc, l.exp > 0 ? img : invert(spec, img));
    }
    return acc;
}

std::string lawName(InvariantSubsemigroupReport::Law law)
{
    switch (law) {
    case InvariantSubsemigroupReport::Law::None: return "none";
    case InvariantSubsemigroupReport::Law::Multiplication: return "closure under multiplication";
    case InvariantSubsemigroupReport::Law::Conjugation: return "closure under conjugation";
    case InvariantSubsemigroupReport::Law::Totality: return "g or g^-1 in S";
    }
    return {};
}

namespace {

/**
 * Checks the three laws over a list of group elements (images of all
 * enumerated words). Ops: mul(i, j) and conj(g, x) return elements,
 * member(elem) decides S, name(i) renders element i.
 */
template <class Elem, class Mul, class Inv, class Member, class Name>
void runInvariantLaws(const std::vector<Elem>& elems, Mul mul, Inv inv, Member member, Name name,
                      InvariantSubsemigroupReport& report)
{
    using Law = InvariantSubsemigroupReport::Law;
    std::vector<char> in(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) in[i] = member(elems[i]) ? 1 : 0;

    auto fail = [&](Law law, std::string what) {
        report.pass = false;
        report.failedLaw = law;
        report.counterexample = std::move(what);
    };

    for (std::size_t g = 0; g < elems.size(); ++g) {
        if (!in[g] && !member(inv(elems[g]))) {
            fail(Law::Totality, "g=" + name(g) + ": neither g nor g^-1 in S");
            return;
        }
    }
    for (std::size_t x = 0; x < elems.size(); ++x) {
        if (!in[x]) continue;
        for (std::size_t y = 0; y < elems.size(); ++y) {
            if (in[y] && !member(mul(elems[x], elems[y]))) {
                fail(Law::Multiplication, "x=" + name(x) + " y=" + name(y) + ": x, y in S but xy not in S");
                return;
            }
        }
    }
    for (std::size_t g = 0; g < elems.size(); ++g) {
        const Elem gi = inv(elems[g]);
        for (std::size_t x = 0; x < elems.size(); ++x) {
            if (in[x] && !member(mul(mul(elems[g], elems[x]), gi))) {
                fail(Law::Conjugation, "g=" + name(g) + " x=" + name(x) + ": x in S but g x g^-1 not in S");
                return;
            }
        }
    }
}

std::string formatColorGroupWord(const FreeWord& w, const std::vector<std::string>& names)
{
    if (w.isIdentity()) return "e";
    std::string s;
    for (std::size_t i = 0; i < w.letters().size(); ++i) {
        const Letter& l = w.letters()[i];
        s += (i ? " " : "") + ("(" + names[l.gen] + ")") + (l.exp < 0 ? "^-1" : "");
    }
    return s;
}

}

InvariantSubsemigroupReport checkInvariantSubsemigroup(const Valuation& v, std::size_t maxLen)
{
    InvariantSubsemigroupReport report;
    report.maxLen = maxLen;
    const auto words = enumerateGroupWords(v.colorCount(), maxLen);
    report.wordsEnumerated = words.size();

    // S depends on a word only through its value, so duplicates are checked once
    const auto& spec = v.spec();
    std::map<std::string, std::size_t> seen;
    std::vector<GroupElement> images;
    std::vector<std::size_t> representative;
    for (std::size_t i = 0; i < words.size(); ++i) {
        GroupElement img = valGroupWord(v, words[i]);
        if (seen.emplace(formatElement(spec, img), images.size()).second) {
            images.push_back(std::move(img));
            representative.push_back(i);
        }
    }
    report.distinctImages = images.size();

    runInvariantLaws(
        images, [&](const GroupElement& a, const GroupElement& b) { return compose(spec, a, b); },
        [&](const GroupElement& a) { return invert(spec, a); },
        [&](const GroupElement& a) { return sign(spec, a) >= 0; },
        [&](std::size_t i) {
            return formatColorGroupWord(words[representative[i]], v.colors()) + " [val " +
                   formatElement(spec, images[i]) + "]";
        },
        report);
    return report;
}

InvariantSubsemigroupReport checkInvariantSubsemigroupSet(std::size_t alphabetSize, std::size_t maxLen,
                                                          const std::function<bool(const FreeWord&)>& inS)
{
    InvariantSubsemigroupReport report;
    report.maxLen = maxLen;
    const auto words = enumerateGroupWords(alphabetSize, maxLen);
    report.wordsEnumerated = words.size();
    report.distinctImages = words.size();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < alphabetSize; ++i) names.push_back("c" + std::to_string(i));
    runInvariantLaws(
        words, [](const FreeWord& a, const FreeWord& b) { return a * b; },
        [](const FreeWord& a) { return a.inverse(); }, inS,
        [&](std::size_t i) { return formatColorGroupWord(words[i], names); }, report);
    return report;
}

}
