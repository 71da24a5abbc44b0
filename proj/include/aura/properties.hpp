#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aura/aura_space.hpp"
#include "aura/document.hpp"
#include "aura/error.hpp"
#include "aura/generators.hpp"
#include "aura/morphisms.hpp"
#include "aura/open_classes.hpp"
#include "aura/point_set.hpp"
#include "aura/rough_approx.hpp"
#include "aura/separation.hpp"
#include "aura/spread.hpp"
#include "aura/topology.hpp"

namespace aura::props {

struct Counterexample {
  std::uint64_t case_index = 0;
  std::string detail;
  std::string document;  // the failing space, in the space document format
};

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;  // cases on which the property applied
  std::size_t failed = 0;
  std::optional<Counterexample> first_failure;

  [[nodiscard]] bool passed() const noexcept { return failed == 0; }
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::size_t max_n = 0;
  std::vector<PropertyResult> properties;

  [[nodiscard]] bool passed() const {
    for (const auto& p : properties) {
      if (!p.passed()) return false;
    }
    return true;
  }
};

inline constexpr std::size_t kMaxFuzzUniverse = 8;
inline constexpr std::size_t kMapCases = 200;
inline constexpr std::size_t kRefinementCases = 200;

using Failure = std::optional<std::string>;

namespace detail {

using Mask = std::uint64_t;

inline bool sub(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::string show(std::size_t n, Mask m) { return PointSet::from_mask(n, m).to_string(); }

/// Every operator tabulated on all 2^n subsets, indexed by mask.
struct Tables {
  std::size_t n = 0;
  Mask full = 0;
  std::vector<Mask> cl, in, acl, aint, inf, spread;

  explicit Tables(const AuraSpace& s) : n(s.size()), full((Mask{1} << s.size()) - 1) {
    const auto count = std::size_t{1} << n;
    for (Mask m = 0; m < count; ++m) {
      const auto a = PointSet::from_mask(n, m);
      cl.push_back(closure(s.topology(), a).mask());
      in.push_back(interior(s.topology(), a).mask());
      acl.push_back(aura_closure(s, a).mask());
      aint.push_back(aura_interior(s, a).mask());
      inf.push_back(infinity_closure(s, a).mask());
      spread.push_back(spread_step(s, a).mask());
    }
  }

  [[nodiscard]] Mask count() const { return Mask{1} << n; }
};

// Runs f over every ordered pair of subsets; stops at the first failure.
template <typename F>
Failure for_pairs(const Tables& t, F&& f) {
  for (Mask a = 0; a < t.count(); ++a) {
    for (Mask b = 0; b < t.count(); ++b) {
      if (auto r = f(a, b)) return r;
    }
  }
  return std::nullopt;
}

template <typename F>
Failure for_sets(const Tables& t, F&& f) {
  for (Mask a = 0; a < t.count(); ++a) {
    if (auto r = f(a)) return r;
  }
  return std::nullopt;
}

// Closure-operator laws shared by cl, cl_a and cl_a^inf.
inline Failure closure_laws(const Tables& t, const std::vector<Mask>& c, const char* op, bool idempotent) {
  if (c[0] != 0) return std::string(op) + "(empty) is " + show(t.n, c[0]);
  return for_pairs(t, [&](Mask a, Mask b) -> Failure {
    if (!sub(a, c[a])) return std::string(op) + " not extensive at " + show(t.n, a);
    if (sub(a, b) && !sub(c[a], c[b])) return std::string(op) + " not monotone at " + show(t.n, a) + ", " + show(t.n, b);
    if (c[a | b] != (c[a] | c[b])) return std::string(op) + " not additive at " + show(t.n, a) + ", " + show(t.n, b);
    if (idempotent && c[c[a]] != c[a]) return std::string(op) + " not idempotent at " + show(t.n, a);
    return std::nullopt;
  });
}

inline Failure interior_laws(const Tables& t, const std::vector<Mask>& i, const char* op, bool idempotent) {
  if (i[t.full] != t.full) return std::string(op) + "(X) is " + show(t.n, i[t.full]);
  return for_pairs(t, [&](Mask a, Mask b) -> Failure {
    if (!sub(i[a], a)) return std::string(op) + " not contractive at " + show(t.n, a);
    if (sub(a, b) && !sub(i[a], i[b])) return std::string(op) + " not monotone at " + show(t.n, a) + ", " + show(t.n, b);
    if (i[a & b] != (i[a] & i[b])) return std::string(op) + " does not preserve meets at " + show(t.n, a) + ", " + show(t.n, b);
    if (idempotent && i[i[a]] != i[a]) return std::string(op) + " not idempotent at " + show(t.n, a);
    return std::nullopt;
  });
}

inline bool family_subset(const Family& small, const Family& big) {
  for (const auto& s : small) {
    if (!std::binary_search(big.begin(), big.end(), s)) return false;
  }
  return true;
}

inline std::string profile_text(const ContinuityProfile& p) {
  std::string out;
  auto add = [&](const char* k, bool v) { out += std::string(out.empty() ? "" : " ") + k + "=" + (v ? "1" : "0"); };
  add("continuous", p.continuous);
  add("a_continuous", p.a_continuous);
  add("a_semi", p.a_semi);
  add("a_pre", p.a_pre);
  add("a_alpha", p.a_alpha);
  add("a_beta", p.a_beta);
  return out;
}

inline Failure continuity_hierarchy(const ContinuityProfile& p) {
  const bool ok = (!p.continuous || p.a_alpha) && (!p.a_alpha || (p.a_semi && p.a_pre)) &&
                  (!(p.a_semi || p.a_pre) || p.a_beta);
  if (ok) return std::nullopt;
  return "profile breaks the hierarchy: " + profile_text(p);
}

// Uniform maps with rejection until `want` holds; falls back to the last draw.
inline SpaceMap draw_map(std::mt19937_64& rng, const AuraSpace& from, const AuraSpace& to, bool want_a_continuous) {
  auto m = gen::random_map(rng, from, to);
  for (int attempt = 0; want_a_continuous && attempt < 32; ++attempt) {
    if (continuity_profile(m).a_continuous) break;
    m = gen::random_map(rng, from, to);
  }
  return m;
}

inline std::string map_text(const SpaceMap& m) {
  std::string out = "mapping [";
  for (std::size_t x = 0; x < m.mapping.size(); ++x) out += (x ? "," : "") + std::to_string(m.mapping[x]);
  return out + "] onto target:\n" + doc::encode_space(m.target);
}

}  // namespace detail

/// Runs every law suite on `cases` generated spaces. Map and refinement laws
/// use the first kMapCases / kRefinementCases cases.
inline SuiteReport run_property_suite(std::uint64_t seed, std::size_t cases, std::size_t max_n) {
  if (cases < 1) throw Error(ErrorCode::precondition, "cases must be at least 1");
  if (max_n < 2 || max_n > kMaxFuzzUniverse) {
    throw Error(ErrorCode::precondition, "max_n must lie in [2, " + std::to_string(kMaxFuzzUniverse) + "]");
  }
  using namespace detail;

  SuiteReport report{seed, cases, max_n, {}};
  auto slot = [&](const std::string& name) -> PropertyResult& {
    for (auto& p : report.properties) {
      if (p.name == name) return p;
    }
    report.properties.push_back(PropertyResult{name, 0, 0, std::nullopt});
    return report.properties.back();
  };

  for (std::size_t i = 0; i < cases; ++i) {
    const auto s = gen::case_space(seed, i, max_n);
    auto extra = gen::case_rng(seed ^ 0x9e3779b97f4a7c15ULL, i);
    const Tables t(s);
    const auto n = t.n;
    const auto prof = scope_profile(s);

    auto check = [&](const std::string& name, bool applies, const std::function<Failure()>& body) {
      auto& r = slot(name);
      if (!applies) return;
      ++r.checked;
      Failure f;
      try {
        f = body();
      } catch (const std::exception& e) {
        f = std::string("raised: ") + e.what();
      }
      if (!f) return;
      if (!r.first_failure) r.first_failure = Counterexample{i, *f, doc::encode_space(s, "case-" + std::to_string(i))};
      ++r.failed;
    };

    // Classical operators.
    check("topology.kuratowski", true, [&]() -> Failure {
      if (auto f = closure_laws(t, t.cl, "cl", true)) return f;
      if (auto f = interior_laws(t, t.in, "int", true)) return f;
      return for_sets(t, [&](Mask a) -> Failure {
        if (t.cl[a] != (t.full & ~t.in[t.full & ~a])) return "cl and int not dual at " + show(n, a);
        if (!s.topology().is_open(PointSet::from_mask(n, t.in[a]))) return "int(" + show(n, a) + ") not open";
        return std::nullopt;
      });
    });
    check("topology.generated_valid", true, [&]() -> Failure {
      auto v = validate_topology(s.topology());
      if (!v.ok()) return v.violations.front().message;
      return std::nullopt;
    });

    // Aura closure, interior and their completions.
    check("aura.cech_axioms", true, [&]() -> Failure {
      if (auto f = closure_laws(t, t.acl, "cl_a", false)) return f;
      return for_sets(t, [&](Mask a) -> Failure {
        if (!sub(t.cl[a], t.acl[a])) return "cl not inside cl_a at " + show(n, a);
        return std::nullopt;
      });
    });
    check("aura.interior_laws", true, [&]() -> Failure {
      if (auto f = interior_laws(t, t.aint, "int_a", false)) return f;
      return for_sets(t, [&](Mask a) -> Failure {
        if (!sub(t.aint[a], t.in[a])) return "int_a not inside int at " + show(n, a);
        if (t.aint[a] != (a & ~t.acl[t.full & ~a])) return "int_a and cl_a not dual at " + show(n, a);
        return std::nullopt;
      });
    });
    check("aura.kuratowski_completion", true, [&]() { return closure_laws(t, t.inf, "cl_a^inf", true); });
    check("aura.topology_chain", true, [&]() -> Failure {
      const auto ta = aura_topology(s);
      const auto ti = infinity_topology(s);
      for (const auto* fam : {&ta, &ti}) {
        auto v = validate_topology(*fam);
        if (!v.ok()) return "derived family is not a topology: " + v.violations.front().message;
      }
      if (!family_subset(ti.opens(), ta.opens())) return std::string("infinity topology not inside aura topology");
      const auto opens = s.topology().opens();
      if (!family_subset(ta.opens(), opens)) return std::string("aura topology not inside the topology");
      return std::nullopt;
    });
    check("aura.stabilization", true, [&]() -> Failure {
      return for_sets(t, [&](Mask a) -> Failure {
        const auto tr = closure_trace(s, PointSet::from_mask(n, a));
        if (tr.stabilized_at > n) return "trace from " + show(n, a) + " stabilizes at " + std::to_string(tr.stabilized_at);
        for (std::size_t k = 1; k < tr.stages.size(); ++k) {
          if (!tr.stages[k - 1].subset_of(tr.stages[k])) return "trace from " + show(n, a) + " shrinks";
        }
        if (tr.limit().mask() != t.inf[a]) return "trace limit differs from cl_a^inf at " + show(n, a);
        return std::nullopt;
      });
    });
    check("aura.special_auras", true, [&]() -> Failure {
      if (prof.discrete && !(prof.transitive && prof.symmetric)) return std::string("discrete scope not transitive and symmetric");
      return for_sets(t, [&](Mask a) -> Failure {
        if (prof.trivial && a != 0 && t.acl[a] != t.full) return "trivial scope: cl_a(" + show(n, a) + ") != X";
        if (prof.discrete && t.acl[a] != a) return "discrete scope: cl_a(" + show(n, a) + ") != A";
        return std::nullopt;
      });
    });
    check("aura.symmetric_closure", prof.symmetric, [&]() -> Failure {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          const bool xy = t.acl[Mask{1} << y] >> x & 1U;
          const bool yx = t.acl[Mask{1} << x] >> y & 1U;
          if (xy != yx) return "symmetric scope but closures of " + std::to_string(x) + ", " + std::to_string(y) + " disagree";
        }
      }
      return std::nullopt;
    });
    check("aura.cover_base", true, [&]() -> Failure {
      for (const auto& a : aura_topology(s).opens()) {
        PointSet u(n);
        a.for_each([&](std::size_t x) { u |= s.aura(x); });
        if (u != a) return "aura-open " + a.to_string() + " is not the union of its points' auras";
      }
      return std::nullopt;
    });
    check("aura.transitive_base", prof.transitive, [&]() -> Failure {
      for (std::size_t x = 0; x < n; ++x) {
        if (!is_aura_open(s, s.aura(x))) return "aura of " + std::to_string(x) + " is not aura-open";
      }
      return for_sets(t, [&](Mask a) -> Failure {
        if (t.acl[t.acl[a]] != t.acl[a]) return "cl_a not idempotent at " + show(n, a);
        return std::nullopt;
      });
    });

    // Generalized open classes.
    check("classes.hierarchy", true, [&]() -> Failure {
      const auto h = verify_hierarchy(s);
      for (const auto& e : h.edges) {
        if (!e.holds) {
          return std::string(to_string(e.edge.sub)) + " => " + std::string(to_string(e.edge.super)) +
                 " fails at " + e.counterexample->to_string();
        }
      }
      return std::nullopt;
    });
    check("classes.alpha_inside_semi_and_pre", true, [&]() -> Failure {
      return for_sets(t, [&](Mask a) -> Failure {
        const auto p = classify_set(s, PointSet::from_mask(n, a));
        if (p[OpenClass::a_alpha_open] && !(p[OpenClass::a_semi_open] && p[OpenClass::a_pre_open])) {
          return "aura-alpha-open " + show(n, a) + " is not aura-semi-open and aura-pre-open";
        }
        return std::nullopt;
      });
    });
    check("classes.transitive_alpha_decomposition", prof.transitive, [&]() -> Failure {
      return for_sets(t, [&](Mask a) -> Failure {
        const auto p = classify_set(s, PointSet::from_mask(n, a));
        if (p[OpenClass::a_alpha_open] != (p[OpenClass::a_semi_open] && p[OpenClass::a_pre_open])) {
          return "alpha-open differs from semi-and-pre-open at " + show(n, a);
        }
        return std::nullopt;
      });
    });
    check("classes.semi_open_unions", true, [&]() -> Failure {
      const auto semi = enumerate_class(s, OpenClass::a_semi_open);
      for (const auto& u : semi) {
        for (const auto& v : semi) {
          if (!in_class(s, u | v, OpenClass::a_semi_open)) return "union of " + u.to_string() + " and " + v.to_string();
        }
      }
      PointSet u(n);
      const auto k = gen::uniform(extra, 0, semi.size());
      for (std::size_t j = 0; j < k; ++j) u |= gen::pick(extra, semi);
      if (!in_class(s, u, OpenClass::a_semi_open)) return "random union " + u.to_string() + " not aura-semi-open";
      return std::nullopt;
    });
    check("classes.a_open_is_topology", true, [&]() -> Failure {
      const auto fam = enumerate_class(s, OpenClass::a_open);
      auto v = validate_topology(n, fam);
      if (!v.ok()) return v.violations.front().message;
      if (fam != aura_topology(s).opens()) return std::string("a_open class differs from the aura topology");
      return std::nullopt;
    });

    // Maps.
    if (i < kMapCases) {
      const auto y = gen::random_space(extra, gen::uniform(extra, 2, max_n));
      const auto z = gen::random_space(extra, gen::uniform(extra, 2, max_n));
      const auto f = draw_map(extra, s, y, i % 2 == 0);
      const auto g = draw_map(extra, y, z, i % 2 == 0);
      const auto gf = compose(f, g);
      const auto pf = continuity_profile(f), pg = continuity_profile(g), pgf = continuity_profile(gf);

      check("maps.continuity_hierarchy", true, [&]() -> Failure {
        for (const auto* p : {&pf, &pg, &pgf}) {
          if (auto r = continuity_hierarchy(*p)) return *r + "; " + map_text(f);
        }
        return std::nullopt;
      });
      check("maps.a_continuous_composition", pf.a_continuous && pg.a_continuous, [&]() -> Failure {
        if (!pgf.a_continuous) return "composite of aura-continuous maps is not aura-continuous; " + map_text(f);
        return std::nullopt;
      });
      check("maps.semi_then_continuous", pf.a_semi && pg.continuous, [&]() -> Failure {
        if (!pgf.a_semi) return "aura-semi-continuous then continuous is not aura-semi-continuous; " + map_text(f);
        return std::nullopt;
      });
      check("maps.semi_characterization", true, [&]() -> Failure {
        const bool closed = semi_continuity_via_closed(f);
        const bool nbhd = semi_continuity_via_neighbourhoods(f);
        if (closed != pf.a_semi || nbhd != pf.a_semi) {
          return "semi flag " + std::to_string(pf.a_semi) + ", closed-set form " + std::to_string(closed) +
                 ", neighbourhood form " + std::to_string(nbhd) + "; " + map_text(f);
        }
        return std::nullopt;
      });
      check("maps.transitive_decomposition", prof.transitive, [&]() -> Failure {
        if (pf.a_alpha != (pf.a_semi && pf.a_pre)) return "alpha flag differs from semi-and-pre; " + map_text(f);
        return std::nullopt;
      });
    }

    // Separation.
    {
      const auto sep = separation_profile(s);
      check("separation.chain", true, [&]() -> Failure {
        if ((sep.a_t2 && !sep.a_t1) || (sep.a_t1 && !sep.a_t0)) return std::string("aura separation chain broken");
        if ((sep.t2 && !sep.t1) || (sep.t1 && !sep.t0)) return std::string("classical separation chain broken");
        return std::nullopt;
      });
      check("separation.t1_characterization", true, [&]() -> Failure {
        if (t1_via_singletons(s).all_closed != sep.a_t1) return std::string("closed singletons disagree with aura-T1");
        return std::nullopt;
      });
    }

    // Rough approximation.
    check("rough.laws", true, [&]() -> Failure {
      if (t.aint[0] != 0 || t.acl[0] != 0 || t.aint[t.full] != t.full || t.acl[t.full] != t.full) {
        return std::string("empty set or whole space is not fixed");
      }
      if (auto f = for_sets(t, [&](Mask a) -> Failure {
            const auto r = approximate(s, PointSet::from_mask(n, a));
            if (!(r.lower.subset_of(r.target) && r.target.subset_of(r.upper))) return "bounds fail at " + show(n, a);
            if (r.boundary != r.upper - r.lower) return "boundary is not upper minus lower at " + show(n, a);
            if (!(r.roughness.num + r.accuracy.num == r.accuracy.den && r.roughness.den == r.accuracy.den)) {
              return "roughness is not one minus accuracy at " + show(n, a);
            }
            if (!r.upper.empty() && r.definable != (r.accuracy == Ratio{1, 1})) return "definability mismatch at " + show(n, a);
            const auto c = t.full & ~a;
            if (t.aint[c] != (t.full & ~t.acl[a])) return "lower(A^c) != upper(A)^c at " + show(n, a);
            if (t.acl[c] != (t.full & ~t.aint[a])) return "upper(A^c) != lower(A)^c at " + show(n, a);
            if (!sub(t.aint[t.aint[a]], t.aint[a])) return "lower(lower A) not inside lower A at " + show(n, a);
            if (!sub(t.acl[a], t.acl[t.acl[a]])) return "upper A not inside upper(upper A) at " + show(n, a);
            return std::nullopt;
          })) {
        return f;
      }
      return for_pairs(t, [&](Mask a, Mask b) -> Failure {
        if (t.aint[a & b] != (t.aint[a] & t.aint[b])) return "lower does not distribute over meets";
        if (t.acl[a | b] != (t.acl[a] | t.acl[b])) return "upper does not distribute over joins";
        if (sub(a, b) && !(sub(t.aint[a], t.aint[b]) && sub(t.acl[a], t.acl[b]))) return "approximations not monotone";
        return std::nullopt;
      });
    });
    if (i < kRefinementCases) {
      const auto fine = gen::random_refinement(extra, s);
      check("rough.refinement_monotonicity", true, [&]() -> Failure {
        if (!is_refinement(s, fine)) return std::string("generated refinement is not pointwise inside");
        return for_sets(t, [&](Mask a) -> Failure {
          const auto r = refinement_report(s, fine, PointSet::from_mask(n, a));
          if (!(r.lower_grows && r.upper_shrinks && r.boundary_shrinks)) {
            return "monotonicity fails at " + show(n, a) + " with refined scope:\n" + doc::encode_space(fine);
          }
          return std::nullopt;
        });
      });
    }
    check("rough.partition_reduction", prof.symmetric && prof.transitive, [&]() -> Failure {
      const auto part = partition_from_scope(s);
      if (!part) return std::string("symmetric transitive auras do not form a partition");
      return for_sets(t, [&](Mask a) -> Failure {
        const auto set = PointSet::from_mask(n, a);
        const auto x = approximate(s, set), y = pawlak_approximate(*part, set);
        if (x.lower != y.lower || x.upper != y.upper) return "partition approximation differs at " + show(n, a);
        return std::nullopt;
      });
    });

    // Spread.
    check("spread.laws", true, [&]() -> Failure {
      return for_sets(t, [&](Mask a) -> Failure {
        const auto sa = t.spread[a];
        if (!sub(a, sa) || !sub(sa, t.acl[sa])) return "A, S(A), cl_a(S(A)) not a chain at " + show(n, a);
        if (prof.transitive && !is_aura_open(s, PointSet::from_mask(n, sa))) return "S(" + show(n, a) + ") not aura-open";
        const auto tr = spread_trace(s, PointSet::from_mask(n, a));
        if (tr.stabilized_at > n) return "spread from " + show(n, a) + " stabilizes late";
        if (spread_step(s, tr.reach) != tr.reach) return "spread reach from " + show(n, a) + " is not a fixpoint";
        return std::nullopt;
      });
    });
    check("spread.transitive_components", prof.transitive, [&]() -> Failure {
      for (const auto& c : spread_components(s).components) {
        if (!is_aura_open(s, c.reach)) return "component " + c.reach.to_string() + " is not aura-open";
        if (prof.symmetric && aura_closure(s, c.reach) != c.reach) {
          return "component " + c.reach.to_string() + " is not closed under cl_a";
        }
      }
      return std::nullopt;
    });
    check("spread.quarantine_containment", true, [&]() -> Failure {
      const auto q = gen::random_quarantine(extra, s);
      const auto after = apply_quarantine(s, q);
      if (!is_refinement(s, after)) return "quarantine by " + q.to_string() + " is not a refinement";
      return for_sets(t, [&](Mask a) -> Failure {
        const auto seed_set = PointSet::from_mask(n, a);
        if (!total_spread(after, seed_set).subset_of(total_spread(s, seed_set))) {
          return "quarantine by " + q.to_string() + " enlarges the reach of " + show(n, a);
        }
        return std::nullopt;
      });
    });

    // Documents.
    check("documents.round_trip", true, [&]() -> Failure {
      const auto text = doc::encode_space(s, "case");
      const auto back = doc::decode_space(text);
      if (doc::encode_space(back, "case") != text) return std::string("re-encoding changes the text");
      if (!(back == s)) return std::string("decoded space differs");
      return for_sets(t, [&](Mask a) -> Failure {
        const auto set = PointSet::from_mask(n, a);
        if (aura_closure(back, set).mask() != t.acl[a] || aura_interior(back, set).mask() != t.aint[a]) {
          return "decoded operators differ at " + show(n, a);
        }
        return std::nullopt;
      });
    });
  }
  return report;
}

}  // namespace aura::props
