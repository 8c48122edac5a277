#include "monolab/quotients.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <unordered_set>

namespace monolab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<Monomial> minimal_colon_generators(const std::vector<Monomial>& earlier,
                                               const Monomial& u) {
    std::vector<Monomial> colons;
    colons.reserve(earlier.size());
    for (const auto& e : earlier) colons.push_back(e.colon(u));
    return minimalize(u.vars(), std::move(colons)).generators();
}

/// Shared backtracking core. Admissibility of a prefix depends only on the
/// set of chosen generators, so failed states are memoized as dead subsets.
class LqSearch {
public:
    LqSearch(const MonomialIdeal& ideal, const SearchOptions& opts) : ideal_(ideal), opts_(opts) {
        m_ = ideal.generator_count();
        if (m_ > opts.generator_cap)
            throw cap_exceeded("generator count " + std::to_string(m_) + " exceeds cap " +
                               std::to_string(opts.generator_cap));
        const auto& g = ideal.generators();
        col_.assign(m_, std::vector<Monomial>());
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) col_[i].push_back(g[i].colon(g[j]));
        cover_.assign(m_, std::vector<uint32_t>(m_, 0));
        for (int j = 0; j < m_; ++j)
            for (int i = 0; i < m_; ++i) {
                if (i == j) continue;
                for (int k = 0; k < m_; ++k) {
                    if (k == j) continue;
                    if (col_[k][j].degree() == 1 && col_[k][j].divides(col_[i][j]))
                        cover_[j][i] |= (1u << k);
                }
            }
    }

    /// blocks: optional key per generator; candidates are restricted to the
    /// minimal remaining key. initial: optional set that must occupy the
    /// first positions. Returns the found sequence, nullopt when exhausted.
    std::optional<std::vector<int>> run(const std::vector<int>* block_key, uint32_t initial_mask) {
        if (m_ == 0) return std::vector<int>{};
        seq_.clear();
        dead_.clear();
        states_ = 0;
        block_key_ = block_key;
        initial_mask_ = initial_mask;
        if (dfs(0)) return seq_;
        return std::nullopt;
    }

    long long states() const { return states_; }

private:
    bool step_ok(uint32_t used, int c) const {
        for (int i = 0; i < m_; ++i)
            if ((used >> i) & 1u)
                if ((used & cover_[c][i]) == 0) return false;
        return true;
    }

    std::vector<int> candidates(uint32_t used) const {
        uint32_t remaining = ~used & ((m_ == 32 ? ~0u : (1u << m_) - 1u));
        uint32_t pool = remaining;
        if (uint32_t init_left = initial_mask_ & remaining; init_left != 0) pool = init_left;
        std::vector<int> out;
        if (block_key_) {
            int best = 0;
            bool have = false;
            for (int i = 0; i < m_; ++i)
                if ((pool >> i) & 1u)
                    if (!have || (*block_key_)[i] < best) {
                        best = (*block_key_)[i];
                        have = true;
                    }
            for (int i = 0; i < m_; ++i)
                if (((pool >> i) & 1u) && (*block_key_)[i] == best) out.push_back(i);
        } else {
            for (int i = 0; i < m_; ++i)
                if ((pool >> i) & 1u) out.push_back(i);
        }
        return out;
    }

    bool dfs(uint32_t used) {
        if (static_cast<int>(seq_.size()) == m_) return true;
        if (dead_.contains(used)) return false;
        if (++states_ > opts_.state_budget) throw cap_exceeded("admissible-order search budget exceeded");
        for (int c : candidates(used)) {
            if (!step_ok(used, c)) continue;
            seq_.push_back(c);
            if (dfs(used | (1u << c))) return true;
            seq_.pop_back();
        }
        dead_.insert(used);
        return false;
    }

    const MonomialIdeal& ideal_;
    SearchOptions opts_;
    int m_ = 0;
    std::vector<std::vector<Monomial>> col_;
    std::vector<std::vector<uint32_t>> cover_;
    std::vector<int> seq_;
    std::unordered_set<uint32_t> dead_;
    long long states_ = 0;
    const std::vector<int>* block_key_ = nullptr;
    uint32_t initial_mask_ = 0;
};

}  // namespace

std::vector<Monomial> GeneratorOrder::monomials() const {
    std::vector<Monomial> out;
    out.reserve(seq.size());
    for (int i : seq) out.push_back(ideal.generators().at(i));
    return out;
}

bool GeneratorOrder::is_degree_increasing() const {
    auto ms = monomials();
    for (size_t i = 1; i < ms.size(); ++i)
        if (ms[i - 1].degree() > ms[i].degree()) return false;
    return true;
}

bool GeneratorOrder::is_support_degree_increasing() const {
    auto ms = monomials();
    for (size_t i = 1; i < ms.size(); ++i)
        if (ms[i - 1].support_degree() > ms[i].support_degree()) return false;
    return true;
}

nlohmann::json GeneratorOrder::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : monomials()) arr.push_back(m.str());
    return arr;
}

GeneratorOrder identity_order(const MonomialIdeal& ideal) {
    std::vector<int> seq(ideal.generator_count());
    for (size_t i = 0; i < seq.size(); ++i) seq[i] = static_cast<int>(i);
    return GeneratorOrder{ideal, std::move(seq)};
}

PropertyReport is_admissible_order(const GeneratorOrder& order) {
    auto t0 = Clock::now();
    PropertyReport rep;
    rep.property = "admissible-order";
    const auto ms = order.monomials();
    if (ms.size() != order.ideal.generators().size())
        throw std::invalid_argument("order is not a permutation of G(I)");
    rep.detail["order"] = order.to_json();
    std::vector<Monomial> earlier;
    for (size_t j = 1; j < ms.size(); ++j) {
        auto colons = minimal_colon_generators({ms.begin(), ms.begin() + j}, ms[j]);
        for (const auto& c : colons) {
            ++rep.steps;
            if (c.degree() != 1) {
                rep.verdict = Verdict::fails;
                rep.witness = "colon into position " + std::to_string(j + 1) + " (" + ms[j].str() +
                              ") has minimal generator " + c.str() + " of degree " +
                              std::to_string(c.degree());
                rep.detail["position"] = j + 1;
                rep.detail["colon_generator"] = c.str();
                rep.elapsed_ms = ms_since(t0);
                return rep;
            }
        }
    }
    rep.verdict = Verdict::holds;
    if (auto cert = admissibility_certificate(order)) {
        nlohmann::json jc = nlohmann::json::array();
        for (size_t j = 0; j < cert->size(); ++j)
            for (size_t i = 0; i < (*cert)[j].size(); ++i)
                jc.push_back({{"j", j + 2}, {"i", i + 1}, {"k", (*cert)[j][i].first + 1},
                              {"d", (*cert)[j][i].second}});
        rep.detail["certificate"] = std::move(jc);
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

std::optional<AdmissibilityCertificate> admissibility_certificate(const GeneratorOrder& order) {
    const auto ms = order.monomials();
    AdmissibilityCertificate cert;
    for (size_t j = 1; j < ms.size(); ++j) {
        std::vector<std::pair<int, int>> row;
        for (size_t i = 0; i < j; ++i) {
            const Monomial ci = ms[i].colon(ms[j]);
            bool found = false;
            for (size_t k = 0; k < j && !found; ++k) {
                const Monomial ck = ms[k].colon(ms[j]);
                if (ck.degree() == 1 && ck.divides(ci)) {
                    row.emplace_back(static_cast<int>(k), ck.support().front());
                    found = true;
                }
            }
            if (!found) return std::nullopt;
        }
        cert.push_back(std::move(row));
    }
    return cert;
}

std::optional<GeneratorOrder> find_admissible_order(const MonomialIdeal& ideal,
                                                    OrderConstraint constraint,
                                                    const SearchOptions& opts) {
    if (ideal.generator_count() <= 1) return identity_order(ideal);
    LqSearch search(ideal, opts);
    std::vector<int> keys;
    const std::vector<int>* key_ptr = nullptr;
    if (constraint != OrderConstraint::none) {
        for (const auto& g : ideal.generators())
            keys.push_back(constraint == OrderConstraint::degree_increasing ? g.degree()
                                                                            : g.support_degree());
        key_ptr = &keys;
    }
    auto seq = search.run(key_ptr, 0);
    if (!seq) return std::nullopt;
    return GeneratorOrder{ideal, *seq};
}

PropertyReport is_popescu_order(const GeneratorOrder& order, int s, bool weak) {
    auto t0 = Clock::now();
    PropertyReport rep;
    rep.property = weak ? "weak-popescu-order" : "popescu-order";
    const auto ms = order.monomials();
    const int m = static_cast<int>(ms.size());
    if (weak) s = 1;
    if (m > 0 && (s < 1 || s > m)) throw std::invalid_argument("popescu index s out of range");
    rep.detail["order"] = order.to_json();
    rep.detail["s"] = s;
    auto done = [&](Verdict v, std::string w) {
        rep.verdict = v;
        rep.witness = std::move(w);
        rep.elapsed_ms = ms_since(t0);
        return rep;
    };
    if (m <= 1) return done(Verdict::holds, "");
    if (!weak) {
        for (int j = 1; j < s; ++j)
            if (ms[j].support() != ms[0].support())
                return done(Verdict::fails, "supp(" + ms[j].str() + ") differs from supp(" +
                                                ms[0].str() + ") inside the initial block");
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const auto si = ms[i].support(), sj = ms[j].support();
                if (si != sj && std::includes(sj.begin(), sj.end(), si.begin(), si.end()) && i > j)
                    return done(Verdict::fails, "supp(" + ms[i].str() + ") < supp(" + ms[j].str() +
                                                    ") but " + ms[i].str() + " comes later");
            }
    }
    for (int i = s; i < m; ++i) {
        auto colons = minimal_colon_generators({ms.begin(), ms.begin() + i}, ms[i]);
        for (const auto& c : colons) {
            ++rep.steps;
            if (!c.is_pure_power())
                return done(Verdict::fails, "colon into " + ms[i].str() + " has mixed generator " +
                                                c.str() + ", not irreducible");
        }
    }
    return done(Verdict::holds, "");
}

std::optional<std::pair<GeneratorOrder, int>> find_popescu_order(const MonomialIdeal& ideal,
                                                                 bool weak,
                                                                 const SearchOptions& opts) {
    const int m = ideal.generator_count();
    if (m > opts.generator_cap) throw cap_exceeded("generator count exceeds cap");
    if (m <= 1) return std::make_pair(identity_order(ideal), std::max(m, 1));
    const auto& gens = ideal.generators();
    std::vector<int> seq;
    long long states = 0;
    // Exempting a maximal initial run of equal supports from the colon
    // condition is optimal: shrinking s only adds constraints.
    std::function<bool(void)> dfs = [&]() -> bool {
        if (static_cast<int>(seq.size()) == m) return true;
        if (++states > opts.state_budget) throw cap_exceeded("popescu search budget exceeded");
        for (int c = 0; c < m; ++c) {
            if (std::find(seq.begin(), seq.end(), c) != seq.end()) continue;
            const int pos = static_cast<int>(seq.size());
            bool in_run = true;
            if (!weak) {
                for (int p : seq)
                    if (gens[p].support() != gens[c].support()) in_run = false;
                bool support_violation = false;
                for (int p : seq) {
                    auto sc = gens[c].support(), sp = gens[p].support();
                    if (sc != sp && std::includes(sp.begin(), sp.end(), sc.begin(), sc.end()))
                        support_violation = true;
                }
                if (support_violation) continue;
            } else {
                in_run = pos == 0;
            }
            if (!in_run && pos > 0) {
                std::vector<Monomial> earlier;
                for (int p : seq) earlier.push_back(gens[p]);
                bool irreducible = true;
                for (const auto& g : minimal_colon_generators(earlier, gens[c]))
                    if (!g.is_pure_power()) irreducible = false;
                if (!irreducible) continue;
            }
            seq.push_back(c);
            if (dfs()) return true;
            seq.pop_back();
        }
        return false;
    };
    if (!dfs()) return std::nullopt;
    GeneratorOrder order{ideal, seq};
    int s = 1;
    if (!weak) {
        const auto ms = order.monomials();
        while (s < m && ms[s].support() == ms[0].support()) ++s;
    }
    // The run-exempt search can overshoot: verify and fall back to s = 1.
    if (!is_popescu_order(order, s, weak).holds()) {
        if (!is_popescu_order(order, 1, weak).holds()) return std::nullopt;
        s = 1;
    }
    return std::make_pair(order, s);
}

GeneratorOrder wedge_order_construction(const MonomialIdeal& ideal, const GeneratorOrder& order) {
    if (!(order.ideal == ideal)) throw std::invalid_argument("order does not belong to the ideal");
    if (!order.is_support_degree_increasing())
        throw std::invalid_argument("order is not support-degree increasing");
    if (!is_admissible_order(order).holds())
        throw std::invalid_argument("order is not admissible");
    const auto ms = order.monomials();
    const int n = ideal.vars();
    struct Entry {
        int i;
        int j;
        Monomial product;
    };
    std::vector<Entry> pool;
    for (size_t i = 0; i < ms.size(); ++i)
        for (int j = 1; j <= n; ++j)
            if (ms[i].exponent(j) == 0)
                pool.push_back({static_cast<int>(i), j, ms[i].times_variable(j)});
    std::vector<Entry> survivors;
    for (const auto& e : pool) {
        bool removed = false;
        for (const auto& f : pool) {
            if (f.i < e.i && f.product.divides(e.product)) {
                removed = true;
                break;
            }
        }
        if (!removed) survivors.push_back(e);
    }
    MonomialIdeal wedge = ideal_wedge(ideal, MonomialIdeal::maximal(n));
    std::vector<int> seq;
    std::vector<bool> taken(wedge.generator_count(), false);
    for (const auto& e : survivors) {
        int idx = -1;
        for (int k = 0; k < wedge.generator_count(); ++k)
            if (!taken[k] && wedge.generators()[k] == e.product) {
                idx = k;
                break;
            }
        if (idx < 0)
            throw std::logic_error("wedge order construction produced a non-minimal generator: " +
                                   e.product.str());
        taken[idx] = true;
        seq.push_back(idx);
    }
    if (static_cast<int>(seq.size()) != wedge.generator_count())
        throw std::logic_error("wedge order construction missed generators of I ^ m");
    return GeneratorOrder{wedge, std::move(seq)};
}

std::map<int, PropertyReport> componentwise_lq(const MonomialIdeal& ideal, ComponentMode mode,
                                               const SearchOptions& opts) {
    std::map<int, PropertyReport> out;
    if (ideal.is_trivial()) return out;
    int lo = 1, hi = ideal.vars();
    if (mode == ComponentMode::degree) {
        lo = ideal.min_degree();
        hi = ideal.max_degree();
    }
    for (int d = lo; d <= hi; ++d) {
        MonomialIdeal comp = mode == ComponentMode::degree
                                 ? degree_component(ideal, d)
                                 : support_component(ideal, d,
                                                     mode == ComponentMode::support
                                                         ? SupportMode::exact
                                                         : SupportMode::at_least);
        if (comp.is_zero()) continue;
        PropertyReport rep;
        rep.property = "component-lq(d=" + std::to_string(d) + ")";
        rep.detail["component"] = comp.str();
        try {
            auto order = find_admissible_order(comp, OrderConstraint::none, opts);
            if (order) {
                rep.verdict = Verdict::holds;
                rep.detail["order"] = order->to_json();
            } else {
                rep.verdict = Verdict::fails;
                rep.witness = "no admissible order of " + comp.str();
            }
        } catch (const cap_exceeded& e) {
            rep.verdict = Verdict::unknown;
            rep.witness = e.what();
        }
        out.emplace(d, std::move(rep));
    }
    return out;
}

PropertyReport pack_compatibility(const MonomialIdeal& ideal, const SearchOptions& opts) {
    auto t0 = Clock::now();
    PropertyReport rep;
    rep.property = "pack-compatibility";
    if (ideal.is_trivial()) {
        rep.verdict = Verdict::holds;
        rep.elapsed_ms = ms_since(t0);
        return rep;
    }
    const int n = ideal.vars();
    const int lo = ideal.min_support_degree();
    const int hi = ideal.max_support_degree();
    // Components above the top generator support-degree satisfy
    // I<d+1> = I<d> ^ m, so their compatibility constraint is vacuous.
    std::map<int, MonomialIdeal> comps;
    for (int d = lo; d <= hi; ++d) comps.emplace(d, support_component(ideal, d, SupportMode::exact));
    std::map<int, GeneratorOrder> sigma;
    for (int d = lo; d <= hi; ++d) {
        const MonomialIdeal& comp = comps.at(d);
        if (comp.is_zero()) continue;
        uint32_t initial = 0;
        if (d > lo && !comps.at(d - 1).is_zero()) {
            // The hypothesis needs G(I<d-1> ^ m) to sit inside G(I<d>);
            // otherwise the initial-part requirement cannot be met at all.
            MonomialIdeal grown = ideal_wedge(comps.at(d - 1), MonomialIdeal::maximal(n));
            for (const auto& g : grown.generators()) {
                int at = -1;
                for (int k = 0; k < comp.generator_count(); ++k)
                    if (comp.generators()[k] == g) at = k;
                if (at < 0) {
                    rep.verdict = Verdict::fails;
                    rep.witness = "generator " + g.str() + " of I<" + std::to_string(d - 1) +
                                  "> ^ m is not a minimal generator of I<" + std::to_string(d) + ">";
                    rep.elapsed_ms = ms_since(t0);
                    return rep;
                }
                initial |= (1u << at);
            }
        }
        if (comp.generator_count() > opts.generator_cap)
            throw cap_exceeded("pack: component generator count exceeds cap");
        LqSearch search(comp, opts);
        auto seq = search.run(nullptr, initial);
        rep.steps += search.states();
        if (!seq) {
            rep.verdict = Verdict::fails;
            rep.witness = "no admissible order of I<" + std::to_string(d) +
                          "> starting with G(I<" + std::to_string(d - 1) + "> ^ m)";
            rep.detail["component"] = comp.str();
            rep.elapsed_ms = ms_since(t0);
            return rep;
        }
        sigma.emplace(d, GeneratorOrder{comp, *seq});
    }
    // Induced order of G(I): sort by support-degree, ties by sigma_d position.
    std::vector<int> idx(ideal.generator_count());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    auto position_in_sigma = [&](const Monomial& g) {
        const auto& sig = sigma.at(g.support_degree());
        const auto ms = sig.monomials();
        for (size_t p = 0; p < ms.size(); ++p)
            if (ms[p] == g) return static_cast<int>(p);
        throw std::logic_error("generator missing from its support component");
    };
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        const Monomial& ga = ideal.generators()[a];
        const Monomial& gb = ideal.generators()[b];
        if (ga.support_degree() != gb.support_degree())
            return ga.support_degree() < gb.support_degree();
        return position_in_sigma(ga) < position_in_sigma(gb);
    });
    GeneratorOrder induced{ideal, idx};
    rep.verdict = Verdict::holds;
    rep.detail["induced_order"] = induced.to_json();
    nlohmann::json sigmas = nlohmann::json::object();
    for (const auto& [d, sig] : sigma) sigmas[std::to_string(d)] = sig.to_json();
    rep.detail["component_orders"] = std::move(sigmas);
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

}  // namespace monolab
