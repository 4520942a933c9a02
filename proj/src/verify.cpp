#include "rootforge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include "rootforge/coxplane.hpp"
#include "rootforge/groups.hpp"
#include "rootforge/induction.hpp"
#include "rootforge/splitting.hpp"

namespace rootforge {

namespace {

class Recorder {
public:
  explicit Recorder(VerifyReport& r) : report_(r) {}

  void check(const std::string& name, const std::function<std::string(bool&)>& body) {
    CheckResult c{name, false, ""};
    try {
      bool ok = true;
      c.detail = body(ok);
      c.passed = ok;
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(c));
  }

private:
  VerifyReport& report_;
};

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

RootSystem from_simple(std::vector<Multivector> simple) {
  RootSystem rs;
  rs.simple_roots = std::move(simple);
  return rs;
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; }));
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  for (const auto& c : checks) os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  os << passed() << "/" << checks.size() << " checks passed\n";
  if (ok()) os << "all checks passed\n";
  return os.str();
}

VerifyReport verify_root_system(const RootSystem& rs) {
  VerifyReport report;
  Recorder rec(report);
  rec.check("axioms", [&](bool& ok) {
    const AxiomReport a = verify_axioms(rs);
    ok = a.ok();
    std::string d = std::to_string(rs.size()) + " roots, unit_norm=" + (a.unit_norm ? "yes" : "no") +
                    " axiom1=" + (a.axiom1 ? "yes" : "no") + " axiom2=" + (a.axiom2 ? "yes" : "no");
    for (const auto& f : a.failures) d += "; " + f;
    return d;
  });
  rec.check("identification", [&](bool& ok) {
    const Identification id = identify(rs);
    ok = id.name != "unknown";
    return id.name;
  });
  return report;
}

VerifyReport run_verification() {
  VerifyReport report;
  Recorder rec(report);
  const auto a = systems::h3_simple_roots();
  const VersorGroup spin = generate_spin(a);
  const VersorGroup pin = generate_pin(a);
  const auto spin_classes = conjugacy_classes(spin);
  const auto pin_classes = conjugacy_classes(pin);

  rec.check("group orders", [&](bool& ok) {
    ok = spin.order() == 120 && pin.order() == 240;
    return "|Spin(H3)|=" + std::to_string(spin.order()) + " |Pin(H3)|=" + std::to_string(pin.order());
  });

  rec.check("generator paths", [&](bool& ok) {
    std::size_t bad = 0;
    for (const auto* g : {&spin, &pin}) {
      for (const auto& e : g->elements()) {
        Multivector v = evaluate_word(g->generators(), e.word);
        if (e.negated) v = -v;
        if (v != e.value || e.value * reverse(e.value) != Multivector(FieldElement(1))) ++bad;
      }
    }
    ok = bad == 0;
    return std::to_string(bad) + " mismatched words";
  });

  rec.check("spin classes", [&](bool& ok) {
    std::vector<std::size_t> sizes, orders;
    for (const auto& c : spin_classes) {
      sizes.push_back(c.members.size());
      orders.push_back(c.element_order);
    }
    std::vector<std::size_t> sorted = sizes;
    std::sort(sorted.begin(), sorted.end());
    ok = sorted == std::vector<std::size_t>{1, 1, 12, 12, 12, 12, 20, 20, 30};
    return std::to_string(spin_classes.size()) + " classes, sizes " + join(sizes) + ", orders " + join(orders);
  });

  rec.check("pin classes", [&](bool& ok) {
    const Multivector i = Multivector::pseudoscalar();
    std::size_t odd = 0, matched = 0;
    for (const auto& c : pin_classes) {
      if (pin.elements()[c.members.front()].value.is_even()) continue;
      ++odd;
      // An odd class must be I times an even class.
      const Multivector rep = pin.elements()[c.members.front()].value * i;
      for (const auto& s : spin_classes) {
        if (s.members.size() != c.members.size()) continue;
        bool all = true;
        for (std::size_t m : c.members)
          if (!spin.contains(pin.elements()[m].value * i)) all = false;
        bool has = false;
        for (std::size_t m : s.members) has = has || spin.elements()[m].value == rep;
        if (all && has) {
          ++matched;
          break;
        }
      }
    }
    ok = pin_classes.size() == 18 && odd == 9 && matched == 9;
    return std::to_string(pin_classes.size()) + " classes, " + std::to_string(matched) + "/9 odd classes are I times a spin class";
  });

  rec.check("structural facts", [&](bool& ok) {
    std::size_t bivectors = 0, order4 = 0;
    for (const auto& c : spin_classes) {
      if (c.element_order != 4) continue;
      order4 = c.members.size();
      for (std::size_t m : c.members) {
        const Multivector& v = spin.elements()[m].value;
        if (v == grade(v, 2)) ++bivectors;
      }
    }
    const RootSet h3_roots(close_under_reflections(Ambient::Dim3, a).roots);
    std::size_t vectors = 0, order2 = 0;
    for (const auto& c : pin_classes) {
      if (c.element_order != 2 || c.members.size() != 30) continue;
      order2 = c.members.size();
      for (std::size_t m : c.members)
        if (h3_roots.contains(pin.elements()[m].value)) ++vectors;
    }
    ok = order4 == 30 && bivectors == 30 && order2 == 30 && vectors == 30 && h3_roots.size() == 30 &&
         contains_inversion(pin) && !contains_inversion(spin);
    return "order-4 bivectors " + std::to_string(bivectors) + "/" + std::to_string(order4) + ", order-2 roots " +
           std::to_string(vectors) + "/" + std::to_string(order2) + ", inversion in Pin " +
           (contains_inversion(pin) ? "yes" : "no");
  });

  rec.check("induction", [&](bool& ok) {
    ok = true;
    std::ostringstream d;
    const std::vector<std::pair<std::string, std::vector<Multivector>>> rows{
        {"A1^3", systems::a1_cubed_simple_roots()}, {"A3", systems::a3_simple_roots()},
        {"B3", systems::b3_simple_roots()}, {"H3", a}};
    const std::vector<std::pair<std::size_t, std::string>> expected{{8, "A1^4"}, {24, "D4"}, {48, "F4"}, {120, "H4"}};
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const InductionResult r = induce(from_simple(rows[k].second));
      const bool good = r.induced.size() == expected[k].first && r.name == expected[k].second &&
                        verify_axioms(r.induced).ok();
      ok = ok && good;
      d << rows[k].first << "->" << r.name << "(" << r.induced.size() << ") ";
    }
    for (int n = 2; n <= 5; ++n) {
      const auto s = systems::i2_simple_roots(n);
      const RootSystem doubled = double_i2(s[0], s[1]);
      const bool good = doubled.size() == static_cast<std::size_t>(4 * n) && verify_axioms(doubled).ok();
      ok = ok && good;
      d << "I2(" << n << ")x2(" << doubled.size() << ") ";
    }
    std::string out = d.str();
    out.pop_back();
    return out;
  });

  rec.check("cartan matrices", [&](bool& ok) {
    ok = true;
    std::ostringstream d;
    auto expect = [&](const std::string& label, Ambient amb, const std::vector<Multivector>& simple,
                      const std::string& entry) {
      const bool good = cartan_matrix(amb, simple) == catalog_entry(entry).cartan;
      ok = ok && good;
      d << label << (good ? " ok " : " mismatch ");
    };
    expect("H3", Ambient::Dim3, a, "H3");
    expect("H4", Ambient::Dim4Spinor, h4_coxeter_simple_roots(), "H4");
    expect("A2+A2", Ambient::Dim4Spinor, named_simple_roots("A2+A2"), "A2+A2");
    expect("H2+H2", Ambient::Dim4Spinor, named_simple_roots("H2+H2"), "H2+H2");
    for (int n = 2; n <= 5; ++n) {
      const auto s = systems::i2_simple_roots(n);
      const auto i = Multivector::pseudoscalar();
      const std::vector<Multivector> simple{s[0] * s[0], s[0] * s[1], s[0] * i, s[1] * i};
      const char* names[] = {"A1^4", "A2+A2", "I2(4)+I2(4)", "H2+H2"};
      expect("I2(" + std::to_string(n) + ")+I2(" + std::to_string(n) + ")", Ambient::Dim4Spinor, simple, names[n - 2]);
    }
    std::string out = d.str();
    out.pop_back();
    return out;
  });

  const RootSystem h4 = h4_root_system();
  struct SplitCase {
    std::string label;
    std::size_t sub_v, sub_e, comp_v, comp_e;
  };
  const std::vector<SplitCase> cases{{"H2+H2", 20, 20, 100, 500}, {"D4", 24, 96, 96, 432},
                                     {"A1^4", 8, 24, 112, 624},   {"A2+A2", 12, 12, 108, 576},
                                     {"A4", 20, 60, 100, 480}};

  rec.check("600-cell", [&](bool& ok) {
    const EdgeSet e = edges(VertexSet{h4.roots, "600-cell"});
    ok = h4.size() == 120 && e.size() == 720 && e.edge_inner == FieldElement::tau() * FieldElement::fraction(1, 2);
    return std::to_string(h4.size()) + " vertices, " + std::to_string(e.size()) + " edges at " + to_string(e.edge_inner);
  });

  for (const auto& c : cases) {
    rec.check("split " + c.label, [&](bool& ok) {
      const RootSystem sub = named_subsystem(c.label);
      const auto [inside, outside] = split(h4, sub);
      const EdgeSet ei = edges(inside);
      const EdgeSet eo = edges(outside);
      const bool inv = verify_invariance(inside, sub) && verify_invariance(outside, sub);
      ok = inside.size() == c.sub_v && ei.size() == c.sub_e && outside.size() == c.comp_v && eo.size() == c.comp_e && inv;
      return std::to_string(inside.size()) + "/" + std::to_string(ei.size()) + " and " + std::to_string(outside.size()) +
             "/" + std::to_string(eo.size()) + ", invariant " + (inv ? "yes" : "no");
    });
  }

  rec.check("fundamental weights", [&](bool& ok) {
    const auto simple = h4_coxeter_simple_roots();
    const auto w = fundamental_weights(simple);
    std::size_t good = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (spinor_inner(Spinor(w[i]), Spinor(simple[j])) == FieldElement(i == j ? 1 : 0)) ++good;
    ok = good == 16;
    return std::to_string(good) + "/16 duality entries exact";
  });

  rec.check("coxeter plane", [&](bool& ok) {
    const auto simple = h4_coxeter_simple_roots();
    const CartanMatrix cm = cartan_matrix(Ambient::Dim4Spinor, simple);
    const PerronFrobenius pf = perron_frobenius(cm);
    const double expected = 2.0 - 2.0 * std::cos(M_PI / 30.0);
    const ProjectionPlane plane = build_plane(simple, bipartition(cm), pf);
    const auto pts = project(plane, h4.roots);
    // Rotation by 2 pi / 30 maps the point multiset to itself.
    const double c = std::cos(2 * M_PI / 30), s = std::sin(2 * M_PI / 30);
    double worst = 0;
    for (const auto& p : pts) {
      const double x = c * p[0] - s * p[1], y = s * p[0] + c * p[1];
      double best = 1e300;
      for (const auto& q : pts) best = std::min(best, std::hypot(x - q[0], y - q[1]));
      worst = std::max(worst, best);
    }
    const bool positive = std::all_of(pf.eigenvector.begin(), pf.eigenvector.end(), [](double v) { return v > 0; });
    ok = std::abs(pf.eigenvalue - expected) <= 1e-10 && pf.residual <= 1e-10 && positive && worst <= 1e-9;
    std::ostringstream d;
    d << std::scientific << std::setprecision(3) << "|dlambda|=" << std::abs(pf.eigenvalue - expected)
      << " residual=" << pf.residual << " rotation error=" << worst << ", " << distinct_radii(pts).size() << " radii";
    return d.str();
  });

  return report;
}

}  // namespace rootforge
