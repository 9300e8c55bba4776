#pragma once

#include <vector>

#include "qell/gset.hpp"

namespace qell {

struct InertiaOrbit {
  int rep = -1;
  std::vector<int> points;
  std::vector<Permutation> transport;  // transport[i] in C_G(g), transport[i] * rep == points[i]
  GroupPtr stabilizer;                 // Stab_{C_G(g)}(rep); always contains g
};

/// One conjugacy class of G: its rep g, C_G(g), the fixed set X^g and the
/// C_G(g)-orbits on it.
struct InertiaEntry {
  Permutation g;
  long long order = 1;
  GroupPtr centralizer;
  std::vector<int> fixed;
  std::vector<InertiaOrbit> orbits;
  std::vector<int> orbit_of;      // point -> orbit index, -1 when not fixed by g
  std::vector<int> slot_in_orbit;  // point -> position within its orbit

  const Permutation& transport_to(int point) const {
    return orbits[orbit_of[point]].transport[slot_in_orbit[point]];
  }
};

struct InertiaSkeleton {
  std::vector<InertiaEntry> entries;  // indexed by conjugacy class
};

inline InertiaSkeleton inertia_skeleton(const FiniteGSet& x) {
  const auto& grp = *x.group();
  InertiaSkeleton sk;
  for (std::size_t c = 0; c < grp.num_classes(); ++c) {
    InertiaEntry en;
    en.g = grp.class_rep(static_cast<int>(c));
    en.order = en.g.order();
    en.centralizer = centralizer_group(grp, en.g);
    en.fixed = fixed_points(x, en.g);
    en.orbit_of.assign(x.size(), -1);
    en.slot_in_orbit.assign(x.size(), -1);
    for (auto& od : orbits_with_stabilizers(x, en.centralizer->elements(), en.fixed)) {
      InertiaOrbit o;
      o.rep = od.rep;
      o.points = std::move(od.points);
      o.transport = std::move(od.transport);
      if (od.stabilizer.size() == en.centralizer->order())
        o.stabilizer = en.centralizer;
      else
        o.stabilizer = FiniteGroup::from_closed_set(grp.degree(), std::move(od.stabilizer),
                                                    "Stab" + std::to_string(o.rep) + "_" + en.centralizer->name());
      for (std::size_t i = 0; i < o.points.size(); ++i) {
        en.orbit_of[o.points[i]] = static_cast<int>(en.orbits.size());
        en.slot_in_orbit[o.points[i]] = static_cast<int>(i);
      }
      en.orbits.push_back(std::move(o));
    }
    sk.entries.push_back(std::move(en));
  }
  return sk;
}

}  // namespace qell
