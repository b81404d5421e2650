#include "darboux/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>
#include <utility>

namespace darboux::algebra {

namespace {

using Task = std::function<CheckResult()>;

CheckResult make_result(std::string part, std::string relation, std::string lhs, std::string rhs) {
  CheckResult r;
  r.part = std::move(part);
  r.relation = std::move(relation);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

void record_product(CheckResult& r, const OperatorExpr& product) {
  r.product_degree = std::max(r.product_degree, product.momentum_degree());
  r.product_d_power = std::max(r.product_d_power, product.max_d_power());
}

void finish(CheckResult& r, const OperatorExpr& residual) {
  r.commutator_zero = residual.is_zero();
  r.residual_terms = residual.term_count();
  if (!r.commutator_zero) r.residual = residual.to_string();
  r.within_degree_bound =
      r.product_degree <= kMaxMomentumDegree && r.product_d_power <= kMaxDPower;
}

Task commutator_task(std::string part, std::string lhs, std::string rhs, OperatorExpr a,
                     OperatorExpr b) {
  return [=] {
    CheckResult r = make_result(part, "commutator", lhs, rhs);
    const OperatorExpr ab = multiply(a, b);
    const OperatorExpr ba = multiply(b, a);
    record_product(r, ab);
    record_product(r, ba);
    finish(r, ab - ba);
    return r;
  };
}

Task equality_task(std::string part, std::string lhs, std::string rhs,
                   std::function<OperatorExpr()> left, std::function<OperatorExpr()> right) {
  return [=] {
    CheckResult r = make_result(part, "equality", lhs, rhs);
    const OperatorExpr a = left();
    const OperatorExpr b = right();
    record_product(r, a);
    record_product(r, b);
    finish(r, a - b);
    return r;
  };
}

std::string index_name(const std::string& base, int i, int j) {
  return base + "_" + std::to_string(i + 1) + std::to_string(j + 1);
}

void apply_corruption(std::vector<std::vector<OperatorExpr>>& tensor, const std::string& name,
                      int dim) {
  if (name.size() != 3 || name[0] != 'I') throw std::invalid_argument("corrupt: expected I<i><j>");
  const int i = name[1] - '1';
  const int j = name[2] - '1';
  if (i < 0 || i >= dim || j < 0 || j >= dim)
    throw std::invalid_argument("corrupt: index out of range");
  tensor[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
      OperatorExpr::symbol(dim, Symbol::omega, 2) * OperatorExpr::position(dim, i) *
      OperatorExpr::position(dim, j);
}

std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, unsigned threads) {
  std::vector<CheckResult> results(tasks.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (threads == 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) results[k] = tasks[k]();
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < tasks.size(); k = next++) results[k] = tasks[k]();
    });
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace

std::string_view part_name(TheoremPart p) noexcept {
  switch (p) {
    case TheoremPart::commuting: return "i";
    case TheoremPart::involution: return "ii";
    case TheoremPart::sl2: return "sl2";
    case TheoremPart::trace: return "trace";
    case TheoremPart::conjugation: return "conjugation";
    case TheoremPart::identities: return "identities";
    case TheoremPart::adjoint: return "adjoint";
  }
  return "?";
}

std::optional<TheoremPart> parse_part(std::string_view name) noexcept {
  for (TheoremPart p : all_parts())
    if (part_name(p) == name) return p;
  return std::nullopt;
}

std::set<TheoremPart> all_parts() {
  return {TheoremPart::commuting, TheoremPart::involution,  TheoremPart::sl2,
          TheoremPart::trace,     TheoremPart::conjugation, TheoremPart::identities,
          TheoremPart::adjoint};
}

bool VerificationReport::all_passed() const noexcept { return failures() == 0; }

std::size_t VerificationReport::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed(); }));
}

VerificationReport verify_theorem(const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int dim = options.dim;
  const Flavor flavor = options.flavor;
  if (dim < 2 || dim > kMaxDim) throw std::domain_error("verify_theorem: unsupported dimension");

  const bool has_fradkin =
      flavor == Flavor::schrodinger || flavor == Flavor::tlb || flavor == Flavor::tpdm;
  const OperatorExpr h = build_hamiltonian(flavor, dim);
  const std::string h_name = "H_" + std::string(flavor_name(flavor));
  const auto invariants = build_angular_invariants(dim);
  std::vector<std::vector<OperatorExpr>> fradkin;
  if (has_fradkin) {
    fradkin = build_fradkin(flavor, dim);
    if (options.corrupt) apply_corruption(fradkin, *options.corrupt, dim);
  } else if (options.corrupt) {
    throw std::invalid_argument("corrupt: flavor has no Fradkin tensor");
  }
  auto has = [&](TheoremPart p) { return options.parts.count(p) > 0; };
  const auto idx = [](int i) { return static_cast<std::size_t>(i); };

  std::vector<Task> tasks;
  if (has(TheoremPart::commuting)) {
    for (const auto& c : invariants)
      tasks.push_back(commutator_task("i", h_name, c.name, h, c.op));
    if (has_fradkin)
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          tasks.push_back(commutator_task("i", h_name, index_name("I", i, j), h, fradkin[idx(i)][idx(j)]));
  }
  if (has(TheoremPart::involution)) {
    if (has_fradkin)
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
          tasks.push_back(commutator_task("ii", index_name("I", i, i), index_name("I", j, j),
                                          fradkin[idx(i)][idx(i)], fradkin[idx(j)][idx(j)]));
    for (std::size_t a = 0; a < invariants.size(); ++a)
      for (std::size_t b = a + 1; b < invariants.size(); ++b)
        if (invariants[a].name[1] == invariants[b].name[1] ||
            invariants[b].name == "C^(" + std::to_string(dim) + ")" ||
            invariants[a].name == "C^(" + std::to_string(dim) + ")")
          tasks.push_back(commutator_task("ii", invariants[a].name, invariants[b].name,
                                          invariants[a].op, invariants[b].op));
  }
  if (has(TheoremPart::sl2)) {
    const Sl2Realization s = build_sl2(dim);
    const Coefficient hbar(dim, Polynomial::symbol(Symbol::hbar));
    auto i_hbar = [hbar](const OperatorExpr& x, std::int64_t k) {
      return x.left_multiplied(hbar).scaled(GaussianRational(Rational(0), Rational(k)));
    };
    tasks.push_back(equality_task("sl2", "[J3,J+]", "2 i hbar J+",
                                  [=] { return commutator(s.j_3, s.j_plus); },
                                  [=] { return i_hbar(s.j_plus, 2); }));
    tasks.push_back(equality_task("sl2", "[J3,J-]", "-2 i hbar J-",
                                  [=] { return commutator(s.j_3, s.j_minus); },
                                  [=] { return i_hbar(s.j_minus, -2); }));
    tasks.push_back(equality_task("sl2", "[J-,J+]", "4 i hbar J3",
                                  [=] { return commutator(s.j_minus, s.j_plus); },
                                  [=] { return i_hbar(s.j_3, 4); }));
    if (flavor == Flavor::schrodinger)
      tasks.push_back(equality_task(
          "sl2", h_name, "(J+ + omega^2 J-)/(2(1+lambda J-))", [=] { return h; }, [=] {
            const OperatorExpr numerator =
                s.j_plus + OperatorExpr::symbol(dim, Symbol::omega, 2) * s.j_minus;
            const OperatorExpr denominator =
                OperatorExpr::identity(dim) + OperatorExpr::symbol(dim, Symbol::lambda) * s.j_minus;
            // 1 + lambda J- is the multiplication operator D.
            auto inverse = denominator.coefficient(MomentumIndex{}).scalar_d_power_inverse();
            return OperatorExpr::multiplication(dim, *inverse) * numerator.scaled(Rational(1, 2));
          }));
  }
  if (has(TheoremPart::trace) && has_fradkin) {
    tasks.push_back(equality_task("trace", h_name, "1/2 sum_i I_ii", [=] { return h; }, [=] {
      OperatorExpr sum(dim);
      for (int i = 0; i < dim; ++i) sum += fradkin[idx(i)][idx(i)];
      return sum.scaled(Rational(1, 2));
    }));
  }
  if (has(TheoremPart::conjugation) && has_fradkin && flavor != Flavor::schrodinger) {
    const Rational a = similarity_exponent(flavor, dim);
    const std::string by = "D^(" + a.to_string() + ") X D^(" + (-a).to_string() + ")";
    const OperatorExpr h0 = build_hamiltonian(Flavor::schrodinger, dim);
    const auto fradkin0 = build_fradkin(Flavor::schrodinger, dim);
    tasks.push_back(equality_task("conjugation", h_name, "X = H_schrodinger, " + by,
                                  [=] { return h; }, [=] { return conjugate_by_d_power(h0, a); }));
    for (const auto& c : invariants)
      tasks.push_back(equality_task("conjugation", c.name, "X = " + c.name + ", " + by,
                                    [=] { return c.op; },
                                    [=] { return conjugate_by_d_power(c.op, a); }));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const std::string name = index_name("I", i, j);
        tasks.push_back(equality_task(
            "conjugation", name + "_" + std::string(flavor_name(flavor)),
            "X = " + name + "_schrodinger, " + by, [=] { return fradkin[idx(i)][idx(j)]; },
            [=] { return conjugate_by_d_power(fradkin0[idx(i)][idx(j)], a); }));
      }
  }
  if (has(TheoremPart::identities)) {
    const OperatorExpr h0 = build_hamiltonian(Flavor::schrodinger, dim);
    if (flavor == Flavor::schrodinger || flavor == Flavor::lb || flavor == Flavor::tlb) {
      tasks.push_back(equality_task("identities", "H_lb", "H + U1",
                                    [=] { return build_hamiltonian(Flavor::lb, dim); },
                                    [=] { return h0 + lb_momentum_term(dim); }));
      tasks.push_back(equality_task("identities", "H_tlb", "H + U1 + U2",
                                    [=] { return build_hamiltonian(Flavor::tlb, dim); },
                                    [=] { return h0 + lb_momentum_term(dim) + tlb_curvature_term(dim); }));
      tasks.push_back([=] {
        CheckResult r = make_result("identities", "equality",
                                    "U2 = D^((2-N)/4) H D^(-(2-N)/4) - H_lb",
                                    "hbar^2 (N-2) R / (8(N-1))");
        const ConformalIdentityResult c = conformal_potential_identity(dim);
        record_product(r, c.derived_potential);
        OperatorExpr residual = c.derived_potential - c.curvature_side;
        if (!c.curvature_matches_closed_form && residual.is_zero())
          residual = OperatorExpr::identity(dim);
        finish(r, residual);
        return r;
      });
    }
    if (flavor == Flavor::schrodinger || flavor == Flavor::pdm || flavor == Flavor::tpdm) {
      tasks.push_back(equality_task("identities", "H_pdm", "H + V1",
                                    [=] { return build_hamiltonian(Flavor::pdm, dim); },
                                    [=] { return h0 + pdm_momentum_term(dim); }));
      tasks.push_back(equality_task("identities", "H_tpdm", "H + V1 + V2",
                                    [=] { return build_hamiltonian(Flavor::tpdm, dim); },
                                    [=] { return h0 + pdm_momentum_term(dim) + tpdm_potential_term(dim); }));
    }
    if (flavor == Flavor::tlb || flavor == Flavor::tpdm)
      tasks.push_back(equality_task(
          "identities", "H_tpdm", "D^(N/4) H_tlb D^(-N/4)",
          [=] { return build_hamiltonian(Flavor::tpdm, dim); },
          [=] { return conjugate_by_d_power(build_hamiltonian(Flavor::tlb, dim), Rational(dim, 4)); }));
  }
  if (has(TheoremPart::adjoint)) {
    const Rational w = self_adjoint_weight(flavor, dim);
    tasks.push_back(equality_task("adjoint", h_name + "^dagger (weight D^" + w.to_string() + ")",
                                  h_name, [=] { return weighted_adjoint(h, w); }, [=] { return h; }));
  }

  VerificationReport report;
  report.flavor = flavor;
  report.dim = dim;
  report.checks = run_tasks(tasks, options.threads);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace darboux::algebra
