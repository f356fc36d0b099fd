#include "ktuple/theorems.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

#include "ktuple/domination.hpp"
#include "ktuple/generators.hpp"

namespace ktuple {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::holds:
      return "holds";
    case CheckStatus::sharp:
      return "sharp";
    case CheckStatus::violated:
      return "violated";
    case CheckStatus::not_applicable:
      return "not-applicable";
  }
  return "unknown";
}

const CheckRecord& TheoremReport::check(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return c;
  throw std::out_of_range("no check with id '" + std::string(id) + "'");
}

bool TheoremReport::has_violation() const { return count(CheckStatus::violated) > 0; }

std::size_t TheoremReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const CheckRecord& c) { return c.status == status; }));
}

bool has_kk_minus_one_signature(const Graph& g, int k) {
  if (k < 2) return false;
  const auto side = static_cast<std::size_t>(k - 1);
  return g.order() == 2 * side && g.is_regular() && g.min_degree() == side && g.is_bipartite() &&
         g.edge_count() == side * side;
}

namespace {

using Rational = boost::rational<long long>;

Rational q(std::size_t value) { return Rational(static_cast<long long>(value)); }
Rational q(std::size_t num, std::size_t den) {
  return Rational(static_cast<long long>(num), static_cast<long long>(den));
}

std::string render(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

CheckRecord not_applicable(std::string_view id, std::string statement, std::string why) {
  return CheckRecord{std::string(id), std::move(statement), "", "", CheckStatus::not_applicable, std::move(why)};
}

// lhs <= rhs, sharp at equality.
CheckRecord upper_bound(std::string_view id, std::string statement, const Rational& lhs, const Rational& rhs) {
  CheckRecord c{std::string(id), std::move(statement), render(lhs), render(rhs), CheckStatus::holds, ""};
  if (lhs > rhs)
    c.status = CheckStatus::violated;
  else if (lhs == rhs)
    c.status = CheckStatus::sharp;
  return c;
}

// lhs >= rhs, sharp at equality.
CheckRecord lower_bound(std::string_view id, std::string statement, const Rational& lhs, const Rational& rhs) {
  CheckRecord c{std::string(id), std::move(statement), render(lhs), render(rhs), CheckStatus::holds, ""};
  if (lhs < rhs)
    c.status = CheckStatus::violated;
  else if (lhs == rhs)
    c.status = CheckStatus::sharp;
  return c;
}

void violate(CheckRecord& c, const std::string& why) {
  c.status = CheckStatus::violated;
  if (!c.notes.empty()) c.notes += "; ";
  c.notes += why;
}

void note(CheckRecord& c, const std::string& text) {
  if (!c.notes.empty()) c.notes += "; ";
  c.notes += text;
}

class Verifier {
 public:
  Verifier(const Graph& g, int k) : g_(g), k_(k), kk_(static_cast<std::size_t>(k)) {}

  TheoremReport run() {
    report_.invariants = compute_invariants(g_, k_);
    const Graph co = complement(g_);
    report_.complement_min_degree = co.min_degree();
    if (admits_ktuple_set(co, k_, Mode::closed)) report_.complement_domatic = d_xk(co, k_, Mode::closed);

    const auto& inv = report_.invariants;
    closed_ = inv.gamma.has_value();
    if (closed_) {
      gamma_ = inv.gamma->value;
      d_ = inv.domatic->value;
    }

    product();
    ceiling();
    coarse_ceiling();
    bipartite_ceiling();
    sums();
    trivial_domatic();
    nordhaus_gaddum(co);
    floor();
    sandwich();
    bipartite_gamma();
    characterization();
    return std::move(report_);
  }

 private:
  std::string closed_gate() const {
    return "min degree " + std::to_string(g_.min_degree()) + " < k-1 = " + std::to_string(k_ - 1);
  }

  void add(CheckRecord c) { report_.checks.push_back(std::move(c)); }

  void product() {
    const std::string text = "gamma_xk * d_xk <= n";
    if (!closed_) return add(not_applicable("C1", text, closed_gate()));
    auto c = upper_bound("C1", text, q(gamma_ * d_), q(g_.order()));
    if (c.status == CheckStatus::sharp) {
      for (const auto& cls : report_.invariants.domatic->witness.classes) {
        if (cls.size() != gamma_) {
          violate(c, "equality but a witness class has " + std::to_string(cls.size()) + " vertices, not gamma_xk");
          break;
        }
      }
    }
    add(std::move(c));
  }

  void ceiling() {
    const std::string text = "d_xk <= (delta+1)/k";
    if (!closed_) return add(not_applicable("C2", text, closed_gate()));
    auto c = upper_bound("C2", text, q(d_), q(g_.min_degree() + 1, kk_));
    if (c.status == CheckStatus::sharp) {
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (g_.degree(v) != g_.min_degree()) continue;
        for (const auto& cls : report_.invariants.domatic->witness.classes) {
          if (g_.closed_neighborhood(v).count_common(cls) != kk_) {
            violate(c, "equality but N[" + std::to_string(v) + "] does not meet every class in exactly k vertices");
            return add(std::move(c));
          }
        }
      }
    }
    add(std::move(c));
  }

  void coarse_ceiling() {
    const std::string text = "d_xk <= n/(k-1)";
    if (k_ < 2) return add(not_applicable("C3", text, "requires k >= 2"));
    if (!closed_) return add(not_applicable("C3", text, closed_gate()));
    auto c = upper_bound("C3", text, q(d_), q(g_.order(), kk_ - 1));
    if (c.status == CheckStatus::sharp && gamma_ != kk_ - 1) violate(c, "equality but gamma_xk != k-1");
    add(std::move(c));
  }

  void bipartite_ceiling() {
    const std::string text = "bipartite: d_xk <= n/(2k-2), equality iff K_{k-1,k-1}";
    if (k_ < 2) return add(not_applicable("C4", text, "requires k >= 2"));
    if (!g_.is_bipartite()) return add(not_applicable("C4", text, "graph is not bipartite"));
    if (!closed_) return add(not_applicable("C4", text, closed_gate()));
    auto c = upper_bound("C4", text, q(d_), q(g_.order(), 2 * kk_ - 2));
    const bool signature = has_kk_minus_one_signature(g_, k_);
    if (c.status == CheckStatus::sharp && !signature) violate(c, "equality on a graph other than K_{k-1,k-1}");
    if (c.status != CheckStatus::sharp && signature) violate(c, "K_{k-1,k-1} without equality");
    add(std::move(c));
  }

  void sums() {
    const std::string text = "gamma_xk + d_xk <= n+1";
    const std::string text_b = "d_xk >= 2: gamma_xk + d_xk <= n/2+2";
    if (k_ < 2) {
      add(not_applicable("C5", text, "requires k >= 2"));
      add(not_applicable("C5b", text_b, "requires k >= 2"));
      return;
    }
    if (!closed_) {
      add(not_applicable("C5", text, closed_gate()));
      add(not_applicable("C5b", text_b, closed_gate()));
      return;
    }
    auto c = upper_bound("C5", text, q(gamma_ + d_), q(g_.order() + 1));
    if (k_ == 2) note(c, "k = 2 covered through gamma_xk >= k");
    add(std::move(c));
    if (d_ < 2) return add(not_applicable("C5b", text_b, "d_xk = 1"));
    auto b = upper_bound("C5b", text_b, q(gamma_ + d_), q(g_.order(), 2) + 2);
    if (k_ == 2) note(b, "k = 2 covered through gamma_xk >= k");
    add(std::move(b));
  }

  void trivial_domatic() {
    const std::string text = "k-1 <= delta <= 2k-2 implies d_xk = 1";
    if (!closed_) return add(not_applicable("C6", text, closed_gate()));
    if (g_.min_degree() > 2 * kk_ - 2) return add(not_applicable("C6", text, "min degree > 2k-2"));
    CheckRecord c{"C6", text, std::to_string(d_), "1", d_ == 1 ? CheckStatus::holds : CheckStatus::violated, ""};
    add(std::move(c));
  }

  void nordhaus_gaddum(const Graph& co) {
    const std::string text = "d_xk(G) + d_xk(complement) <= (n+1)/k";
    if (!closed_) return add(not_applicable("C7", text, closed_gate()));
    if (!report_.complement_domatic) {
      return add(not_applicable("C7", text,
                                "complement min degree " + std::to_string(co.min_degree()) + " < k-1"));
    }
    const std::size_t d_co = report_.complement_domatic->value;
    const Rational lhs = q(d_ + d_co);
    const Rational rhs = q(g_.order() + 1, kk_);
    auto c = upper_bound("C7", text, lhs, rhs);
    // The sum is an integer, so reaching ⌊(n+1)/k⌋ is the attainable form of
    // equality; the structural consequences need exact equality.
    if (c.status == CheckStatus::holds && lhs == q((g_.order() + 1) / kk_)) {
      c.status = CheckStatus::sharp;
      note(c, "equals floor((n+1)/k)");
    }
    if (lhs == rhs) {
      note(c, "exact equality");
      if (!g_.is_regular()) violate(c, "exact equality on a non-regular graph");
      const bool own = d_ >= d_co;
      const DomaticResult& larger = own ? *report_.invariants.domatic : *report_.complement_domatic;
      const std::size_t d = larger.value;
      const std::size_t r = larger.witness.min_class_size();
      report_.r = r;
      note(c, std::string("r = ") + std::to_string(r) + " from the " + (own ? "graph" : "complement") + " witness");
      if (r + 1 < kk_ || r > 2 * kk_ - 1) violate(c, "r outside [k-1, 2k-1]");
      if (q(g_.order(), r + 1) + q(1, kk_) > q(d) || q(d) > q(g_.order(), r)) {
        violate(c, "d_xk outside [n/(r+1) + 1/k, n/r]");
      }
      if (k_ >= 2 && (q(g_.order(), 2 * kk_) + q(1, kk_) > q(d) || q(d) > q(g_.order(), kk_ - 1))) {
        violate(c, "d_xk outside [n/(2k) + 1/k, n/(k-1)]");
      }
      if (c.status == CheckStatus::violated) note(c, q(d) == q(g_.order(), r) ? "d_xk = n/r" : "d_xk != n/r");
    }
    add(std::move(c));
  }

  void floor() {
    const std::string text = "d_xk >= floor(n/(k(n-delta)))";
    if (!closed_) return add(not_applicable("C8", text, closed_gate()));
    const std::size_t bound = zelinka_floor(g_, k_);
    auto c = lower_bound("C8", text, q(d_), q(bound));
    if (k_ == 1) note(c, "k = 1: d >= floor(n/(n-delta))");
    if (bound >= 1) {
      try {
        auto p = zelinka_partition(g_, k_);
        if (!p || p->size() != bound) violate(c, "constructive partition has the wrong class count");
      } catch (const std::logic_error& e) {
        violate(c, e.what());
      }
    }
    add(std::move(c));
  }

  void sandwich() {
    const std::string lower_text = "d_xkt <= d_xk";
    const std::string upper_text = "d_xk <= 2 d_xkt";
    const auto& total = report_.invariants.domatic_total;
    if (!total) {
      const std::string why =
          "min degree " + std::to_string(g_.min_degree()) + " < k = " + std::to_string(k_);
      add(not_applicable("C9.lower", lower_text, why));
      add(not_applicable("C9.upper", upper_text, why));
      return;
    }
    add(lower_bound("C9.lower", lower_text, q(d_), q(total->value)));
    auto upper = upper_bound("C9.upper", upper_text, q(d_), q(2 * total->value));
    if (upper.status == CheckStatus::violated) {
      // Pairing up disjoint k-tuple dominating sets only guarantees
      // d_xkt >= floor(d_xk / 2).
      note(upper, d_ <= 2 * total->value + 1 ? "d_xk <= 2 d_xkt + 1 holds" : "d_xk > 2 d_xkt + 1");
    }
    add(std::move(upper));
  }

  void bipartite_gamma() {
    const std::string text = "bipartite: gamma_xk >= 2k-2, equality iff K_{k-1,k-1}";
    if (k_ < 2) return add(not_applicable("C10", text, "requires k >= 2"));
    if (!g_.is_bipartite()) return add(not_applicable("C10", text, "graph is not bipartite"));
    if (!closed_) return add(not_applicable("C10", text, closed_gate()));
    auto c = lower_bound("C10", text, q(gamma_), q(2 * kk_ - 2));
    const bool signature = has_kk_minus_one_signature(g_, k_);
    if (c.status == CheckStatus::sharp && !signature) violate(c, "equality on a graph other than K_{k-1,k-1}");
    if (c.status != CheckStatus::sharp && signature) violate(c, "K_{k-1,k-1} without equality");
    add(std::move(c));
  }

  void characterization() {
    const std::string text = "min{t : G is a k-join onto a t-vertex core} = gamma_xk";
    if (!closed_) return add(not_applicable("C11", text, closed_gate()));
    const std::size_t t = min_kjoin_decomposition(g_, k_);
    CheckRecord c{"C11", text, std::to_string(t), std::to_string(gamma_),
                  t == gamma_ ? CheckStatus::holds : CheckStatus::violated, ""};
    add(std::move(c));
  }

  const Graph& g_;
  int k_;
  std::size_t kk_;
  bool closed_ = false;
  std::size_t gamma_ = 0;
  std::size_t d_ = 0;
  TheoremReport report_;
};

}  // namespace

TheoremReport verify_all(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  return Verifier(g, k).run();
}

}  // namespace ktuple
