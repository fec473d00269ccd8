#pragma once

// Strongly free monomial presentations: overlap checks, normal-word
// counting via an avoidance automaton (Aho-Corasick with death states),
// cyclic-word (necklace) counting with cyclic factor checks, and the
// exhaustive admissibility search for degree collections.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncalg/series.hpp"

namespace ncalg {

struct Letter {
    std::string name;
    int degree = 1;
};

using Word = std::vector<int>;  // letter indices

struct MonomialPresentation {
    std::vector<Letter> alphabet;
    std::vector<Word> relations;

    int letter_index(const std::string& name) const {
        for (size_t i = 0; i < alphabet.size(); ++i)
            if (alphabet[i].name == name) return static_cast<int>(i);
        throw std::invalid_argument("monomial: unknown letter '" + name + "'");
    }
    int weight_of(const Word& w) const {
        int s = 0;
        for (int a : w) s += alphabet[static_cast<size_t>(a)].degree;
        return s;
    }
    void validate() const {
        if (alphabet.empty()) throw std::invalid_argument("monomial: empty alphabet");
        for (const Letter& l : alphabet)
            if (l.degree < 1) throw std::invalid_argument("monomial: degrees must be >= 1");
        for (const Word& w : relations) {
            if (w.empty()) throw std::invalid_argument("monomial: empty relation word");
            for (int a : w)
                if (a < 0 || a >= static_cast<int>(alphabet.size()))
                    throw std::invalid_argument("monomial: letter index out of range");
        }
    }
};

inline MonomialPresentation make_monomial(std::vector<Letter> alphabet,
                                          const std::vector<std::vector<std::string>>& rels) {
    MonomialPresentation p;
    p.alphabet = std::move(alphabet);
    for (const auto& names : rels) {
        Word w;
        for (const std::string& nm : names) w.push_back(p.letter_index(nm));
        p.relations.push_back(std::move(w));
    }
    p.validate();
    return p;
}

namespace detail {

inline bool is_factor(const Word& needle, const Word& hay) {
    if (needle.size() > hay.size()) return false;
    for (size_t i = 0; i + needle.size() <= hay.size(); ++i)
        if (std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<long>(i)))
            return true;
    return false;
}

// A nonempty proper suffix of e (length k < |e|, k <= |f|) equals a prefix
// of f.
inline bool suffix_meets_prefix(const Word& e, const Word& f) {
    for (size_t k = 1; k < e.size() && k <= f.size(); ++k)
        if (std::equal(e.end() - static_cast<long>(k), e.end(), f.begin())) return true;
    return false;
}

} // namespace detail

// True iff e and f may sit in a strongly free set together: no proper
// subword containment either way and no nonempty proper suffix of one
// equal to a prefix of the other. The self pair (equal words) tests only
// proper shifts, so ("xy","xy") passes while ("xx","xx") does not.
inline bool non_overlapping(const Word& e, const Word& f) {
    if (e.empty() || f.empty()) throw std::invalid_argument("non_overlapping: empty word");
    if (e != f && (detail::is_factor(e, f) || detail::is_factor(f, e))) return false;
    return !detail::suffix_meets_prefix(e, f) && !detail::suffix_meets_prefix(f, e);
}

inline bool strongly_free(const MonomialPresentation& p) {
    p.validate();
    for (size_t i = 0; i < p.relations.size(); ++i) {
        if (!non_overlapping(p.relations[i], p.relations[i])) return false;
        for (size_t j = i + 1; j < p.relations.size(); ++j) {
            if (p.relations[i] == p.relations[j]) return false;  // duplicate word
            if (!non_overlapping(p.relations[i], p.relations[j])) return false;
        }
    }
    return true;
}

// Deterministic Aho-Corasick automaton over the alphabet. A state is dead
// when some relation word is a suffix of the path leading to it; walks
// avoiding dead states biject with words avoiding every relation factor.
class AvoidanceAutomaton {
public:
    explicit AvoidanceAutomaton(const MonomialPresentation& p) : sigma_(static_cast<int>(p.alphabet.size())) {
        p.validate();
        nodes_.push_back(Node(sigma_));  // root
        for (const Word& w : p.relations) {
            int s = 0;
            for (int a : w) {
                int& nxt = nodes_[static_cast<size_t>(s)].child[static_cast<size_t>(a)];
                if (nxt < 0) {
                    nxt = static_cast<int>(nodes_.size());
                    nodes_.push_back(Node(sigma_));
                }
                s = nxt;
            }
            nodes_[static_cast<size_t>(s)].dead = true;
        }
        // BFS failure links; goto function completed in place.
        std::vector<int> queue;
        for (int a = 0; a < sigma_; ++a) {
            int& c = nodes_[0].child[static_cast<size_t>(a)];
            if (c < 0) c = 0;
            else {
                nodes_[static_cast<size_t>(c)].fail = 0;
                queue.push_back(c);
            }
        }
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int s = queue[qi];
            Node& ns = nodes_[static_cast<size_t>(s)];
            if (nodes_[static_cast<size_t>(ns.fail)].dead) ns.dead = true;
            for (int a = 0; a < sigma_; ++a) {
                int& c = ns.child[static_cast<size_t>(a)];
                int via_fail = nodes_[static_cast<size_t>(ns.fail)].child[static_cast<size_t>(a)];
                if (c < 0) c = via_fail;
                else {
                    nodes_[static_cast<size_t>(c)].fail = via_fail;
                    queue.push_back(c);
                }
            }
        }
    }

    int num_states() const { return static_cast<int>(nodes_.size()); }
    bool dead(int s) const { return nodes_[static_cast<size_t>(s)].dead; }
    int step(int s, int a) const { return nodes_[static_cast<size_t>(s)].child[static_cast<size_t>(a)]; }

private:
    struct Node {
        explicit Node(int sigma) : child(static_cast<size_t>(sigma), -1) {}
        std::vector<int> child;
        int fail = 0;
        bool dead = false;
    };
    int sigma_;
    std::vector<Node> nodes_;
};

// Number of weight-r words with no relation word as a factor, r = 0..N.
// Weighted transfer DP on the automaton: a letter of degree m advances the
// weight by m.
inline ZSeries count_normal_words(const MonomialPresentation& p, int order) {
    AvoidanceAutomaton aut(p);
    const int ns = aut.num_states();
    std::vector<std::vector<Int>> ways(
        static_cast<size_t>(order) + 1, std::vector<Int>(static_cast<size_t>(ns), 0));
    if (!aut.dead(0)) ways[0][0] = 1;
    ZSeries out(order);
    for (int r = 0; r <= order; ++r) {
        Int total = 0;
        for (int s = 0; s < ns; ++s) {
            const Int& w = ways[static_cast<size_t>(r)][static_cast<size_t>(s)];
            if (w == 0) continue;
            total += w;
            for (size_t a = 0; a < p.alphabet.size(); ++a) {
                int r2 = r + p.alphabet[a].degree;
                if (r2 > order) continue;
                int s2 = aut.step(s, static_cast<int>(a));
                if (aut.dead(s2)) continue;
                ways[static_cast<size_t>(r2)][static_cast<size_t>(s2)] += w;
            }
        }
        out.at(r) = total;
    }
    return out;
}

namespace detail {

inline bool is_minimal_rotation(const Word& w) {
    const size_t n = w.size();
    for (size_t k = 1; k < n; ++k)
        for (size_t i = 0; i < n; ++i) {
            int a = w[(i + k) % n], b = w[i];
            if (a < b) return false;
            if (a > b) break;
        }
    return true;
}

// u is a cyclic factor of w iff u occurs in w.w truncated to |w|+|u|-1.
inline bool cyclic_factor(const Word& u, const Word& w) {
    if (u.size() > w.size()) return false;
    const size_t n = w.size();
    for (size_t i = 0; i < n; ++i) {
        bool hit = true;
        for (size_t j = 0; j < u.size(); ++j)
            if (w[(i + j) % n] != u[j]) {
                hit = false;
                break;
            }
        if (hit) return true;
    }
    return false;
}

} // namespace detail

inline constexpr long kDefaultNecklaceCap = 50'000'000;

// Number of weight-r necklaces (cyclic words up to rotation) containing no
// relation word as a cyclic factor, r = 1..N; coefficient 0 is zero so the
// result feeds sym_exp directly. Enumerates words of each weight and keeps
// the lexicographically minimal rotations.
inline ZSeries count_cyclic_avoiding(const MonomialPresentation& p, int order,
                                     long cap = kDefaultNecklaceCap) {
    p.validate();
    ZSeries out(order);
    long visited = 0;
    Word cur;
    std::function<void(int)> dfs = [&](int weight) {
        if (++visited > cap)
            throw std::runtime_error("count_cyclic_avoiding: enumeration cap exceeded");
        if (!cur.empty() && detail::is_minimal_rotation(cur)) {
            bool ok = true;
            for (const Word& rel : p.relations)
                if (detail::cyclic_factor(rel, cur)) {
                    ok = false;
                    break;
                }
            if (ok) out.at(weight) += 1;
        }
        for (size_t a = 0; a < p.alphabet.size(); ++a) {
            int w2 = weight + p.alphabet[a].degree;
            if (w2 > order) continue;
            cur.push_back(static_cast<int>(a));
            dfs(w2);
            cur.pop_back();
        }
    };
    dfs(0);
    return out;
}

// ---- Admissibility of degree collections ----

enum class SearchStatus { Found, NoneExhaustive, Inconclusive };

struct AdmissibleResult {
    SearchStatus status = SearchStatus::Inconclusive;
    std::vector<Word> witness;       // filled when status == Found
    MonomialPresentation alphabet_only;  // the generator alphabet used
};

// Searches for pairwise non-overlapping words w_1..w_p over generators of
// the given degrees with weight(w_j) = degrees_rel[j]. Exhaustive
// backtracking; `budget` bounds the number of search nodes. If the search
// space is exhausted without a witness the verdict certifies
// inadmissibility; hitting the budget is inconclusive.
inline AdmissibleResult admissible_search(const std::vector<int>& degrees_gen,
                                          const std::vector<int>& degrees_rel,
                                          long budget = 10'000'000) {
    if (degrees_gen.empty()) throw std::invalid_argument("admissible_search: no generators");
    for (int d : degrees_gen)
        if (d < 1) throw std::invalid_argument("admissible_search: generator degrees must be >= 1");
    for (int r : degrees_rel)
        if (r < 1) throw std::invalid_argument("admissible_search: relation degrees must be >= 1");

    AdmissibleResult res;
    MonomialPresentation& mp = res.alphabet_only;
    for (size_t i = 0; i < degrees_gen.size(); ++i)
        mp.alphabet.push_back(Letter{"g" + std::to_string(i), degrees_gen[i]});

    // Candidate words per required degree.
    std::map<int, std::vector<Word>> by_weight;
    long nodes = 0;
    bool exceeded = false;
    for (int r : degrees_rel) {
        if (by_weight.count(r)) continue;
        std::vector<Word> cands;
        Word cur;
        std::function<void(int)> gen = [&](int weight) {
            if (++nodes > budget) {
                exceeded = true;
                return;
            }
            if (weight == r && !cur.empty()) {
                cands.push_back(cur);
                return;
            }
            for (size_t a = 0; a < mp.alphabet.size() && !exceeded; ++a) {
                int w2 = weight + mp.alphabet[a].degree;
                if (w2 > r) continue;
                cur.push_back(static_cast<int>(a));
                gen(w2);
                cur.pop_back();
            }
        };
        gen(0);
        if (exceeded) return res;
        by_weight.emplace(r, std::move(cands));
    }

    std::vector<Word> chosen;
    std::function<bool(size_t)> pick = [&](size_t j) -> bool {
        if (j == degrees_rel.size()) return true;
        for (const Word& w : by_weight.at(degrees_rel[j])) {
            if (++nodes > budget) {
                exceeded = true;
                return false;
            }
            if (!non_overlapping(w, w)) continue;
            bool ok = true;
            for (const Word& prev : chosen)
                if (prev == w || !non_overlapping(prev, w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(w);
            if (pick(j + 1)) return true;
            chosen.pop_back();
            if (exceeded) return false;
        }
        return false;
    };
    if (pick(0)) {
        res.status = SearchStatus::Found;
        res.witness = chosen;
    } else {
        res.status = exceeded ? SearchStatus::Inconclusive : SearchStatus::NoneExhaustive;
    }
    return res;
}

// Pretty-printer for witness words ("g0 g1 ..." using letter names).
inline std::string word_to_string(const MonomialPresentation& p, const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += p.alphabet[static_cast<size_t>(w[i])].name;
    }
    return s;
}

} // namespace ncalg
