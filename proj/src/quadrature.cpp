#include "sdg/quadrature.hpp"

#include <array>
#include <string>

namespace sdg::quadrature {
namespace {

// Orbit generators for fully symmetric triangle rules (Dunavant families),
// weights normalized to unit total.
struct Orbit {
  enum Kind { Centroid, S21, S111 } kind;
  double a = 0.0;
  double b = 0.0;
  double w = 0.0;
};

QuadRule expand(int degree, std::initializer_list<Orbit> orbits) {
  QuadRule rule;
  rule.degree = degree;
  auto push = [&](double l1, double l2, double w) {
    rule.nodes.emplace_back(l1, l2);
    rule.weights.push_back(0.5 * w);
  };
  for (const Orbit& o : orbits) {
    switch (o.kind) {
      case Orbit::Centroid:
        push(1.0 / 3.0, 1.0 / 3.0, o.w);
        break;
      case Orbit::S21: {
        const double c = 1.0 - 2.0 * o.a;
        push(o.a, o.a, o.w);
        push(o.a, c, o.w);
        push(c, o.a, o.w);
        break;
      }
      case Orbit::S111: {
        const double c = 1.0 - o.a - o.b;
        const std::array<std::array<double, 2>, 6> perms{
            {{o.a, o.b}, {o.b, o.a}, {o.a, c}, {c, o.a}, {o.b, c}, {c, o.b}}};
        for (const auto& p : perms) push(p[0], p[1], o.w);
        break;
      }
    }
  }
  return rule;
}

QuadRule gauss(int degree, std::initializer_list<double> x, std::initializer_list<double> w) {
  QuadRule rule;
  rule.degree = degree;
  for (double t : x) rule.nodes.emplace_back(t, 0.0);
  rule.weights.assign(w.begin(), w.end());
  return rule;
}

}  // namespace

const QuadRule& triangle_rule(int degree) {
  using O = Orbit;
  static const QuadRule d2 = expand(2, {{O::S21, 1.0 / 6.0, 0.0, 1.0 / 3.0}});
  static const QuadRule d4 = expand(4, {
      {O::S21, 0.44594849091596488632, 0.0, 0.22338158967801146570},
      {O::S21, 0.09157621350977074346, 0.0, 0.10995174365532186764},
  });
  static const QuadRule d6 = expand(6, {
      {O::S21, 0.24928674517091042129, 0.0, 0.11678627572637936603},
      {O::S21, 0.06308901449150222834, 0.0, 0.050844906370206816921},
      {O::S111, 0.053145049844816947353, 0.31035245103378440542, 0.082851075618373575194},
  });
  static const QuadRule d8 = expand(8, {
      {O::Centroid, 0.0, 0.0, 0.14431560767778716825},
      {O::S21, 0.45929258829272315603, 0.0, 0.095091634267284624794},
      {O::S21, 0.17056930775176020662, 0.0, 0.10321737053471825028},
      {O::S21, 0.050547228317030975458, 0.0, 0.032458497623198080311},
      {O::S111, 0.0083947774099576053372, 0.26311282963463811342, 0.027230314174434994265},
  });
  static const QuadRule d10 = expand(10, {
      {O::Centroid, 0.0, 0.0, 0.090817990382753580095},
      {O::S21, 0.48557763338365737737, 0.0, 0.036725957756466704717},
      {O::S21, 0.1094815754850370548, 0.0, 0.045321059435527934783},
      {O::S111, 0.14170721941487995476, 0.30793983876412095017, 0.072757916845420108604},
      {O::S111, 0.025003534762686386074, 0.24667256063990269392, 0.028327242531057484837},
      {O::S111, 0.0095408154002994575802, 0.066803251012200265774, 0.0094216669637328234599},
  });
  switch (degree) {
    case 2: return d2;
    case 4: return d4;
    case 6: return d6;
    case 8: return d8;
    case 10: return d10;
    default: throw UnsupportedRule("no triangle rule of degree " + std::to_string(degree));
  }
}

const QuadRule& edge_rule(int points) {
  static const QuadRule g2 = gauss(3, {0.21132486540518713, 0.78867513459481287}, {0.5, 0.5});
  static const QuadRule g4 = gauss(7,
      {0.069431844202973714, 0.33000947820757187, 0.66999052179242813, 0.93056815579702623},
      {0.17392742256872684, 0.3260725774312731, 0.3260725774312731, 0.17392742256872684});
  static const QuadRule g8 = gauss(15,
      {0.019855071751231912, 0.10166676129318664, 0.2372337950418355, 0.40828267875217511,
       0.59171732124782483, 0.7627662049581645, 0.89833323870681336, 0.98014492824876809},
      {0.050614268145188344, 0.11119051722668717, 0.15685332293894352, 0.18134189168918088,
       0.18134189168918088, 0.15685332293894352, 0.11119051722668717, 0.050614268145188344});
  switch (points) {
    case 2: return g2;
    case 4: return g4;
    case 8: return g8;
    default: throw UnsupportedRule("no edge rule with " + std::to_string(points) + " points");
  }
}

}  // namespace sdg::quadrature
