// Hand-built diagrams shared by several test files.
#pragma once

#include "skein/diagram.hpp"

namespace skein::testing {

inline SlicedDiagram unknot() {
  SlicedDiagram d;
  d.events = {Event::cup(0), Event::cap(0)};
  d.orientation = Orientation{1};
  return d;
}

/// Two-strand closure with three crossings; over = right gives the left-handed trefoil.
inline SlicedDiagram trefoil(Over over) {
  SlicedDiagram d;
  d.events = {Event::cup(0), Event::cup(2), Event::cross(1, over), Event::cross(1, over),
              Event::cross(1, over), Event::cap(2), Event::cap(0)};
  d.orientation = Orientation{1};
  return d;
}

inline SlicedDiagram left_trefoil() { return trefoil(Over::right); }

/// Closed 3-braid sigma1 sigma2^-1 sigma1 sigma2^-1 on nested cups.
inline SlicedDiagram figure_eight() {
  SlicedDiagram d;
  d.events = {Event::cup(0),  Event::cup(1), Event::cup(2), Event::cross(3, Over::left), Event::cross(4, Over::right),
              Event::cross(3, Over::left), Event::cross(4, Over::right), Event::cap(2), Event::cap(1), Event::cap(0)};
  d.orientation = Orientation{1};
  return d;
}

/// Closed 2-braid sigma1^2; the caller orients it.
inline SlicedDiagram hopf(Orientation o) {
  SlicedDiagram d;
  d.events = {Event::cup(0), Event::cup(1), Event::cross(2, Over::left), Event::cross(2, Over::left),
              Event::cap(1), Event::cap(0)};
  d.orientation = std::move(o);
  return d;
}

/// Circle around the single puncture of the annulus.
inline SlicedDiagram core_circle(int sign) {
  SlicedDiagram d;
  d.events = {Event::cup(0), Event::punctures({1}), Event::cap(0)};
  d.orientation = Orientation{sign};
  return d;
}

}  // namespace skein::testing
