#include "multiport/element.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace multiport {
namespace {

void require_unit_interval(double value, const char* what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::domain_error(std::string(what) + " must lie in [0, 1], got " +
                            std::to_string(value));
  }
}

void require_adjacent(int first, int second) {
  if (first < 1) {
    throw std::invalid_argument("mode labels are 1-based; got " + std::to_string(first));
  }
  if (second != first + 1) {
    throw std::invalid_argument("two-mode elements must act on adjacent modes (i, i+1); got (" +
                                std::to_string(first) + ", " + std::to_string(second) + ")");
  }
}

}  // namespace

std::string_view to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::BeamSplitter:
      return "beam_splitter";
    case ElementKind::Swap:
      return "swap";
    case ElementKind::PhaseShifter:
      return "phase_shifter";
  }
  return "unknown";
}

Element::Element(ElementKind kind, int first, int second, double reflectivity, double phase,
                 double loss)
    : kind_(kind),
      first_(first),
      second_(second),
      reflectivity_(reflectivity),
      phase_(phase),
      loss_(loss) {}

Element Element::beam_splitter(int first, int second, double reflectivity) {
  require_adjacent(first, second);
  require_unit_interval(reflectivity, "reflectivity");
  return Element(ElementKind::BeamSplitter, first, second, reflectivity, 0.0, 0.0);
}

Element Element::swap(int first, int second, double reflectivity) {
  require_adjacent(first, second);
  require_unit_interval(reflectivity, "reflectivity");
  return Element(ElementKind::Swap, first, second, reflectivity, 0.0, 0.0);
}

Element Element::phase_shifter(int mode, double phase, double loss) {
  if (mode < 1) {
    throw std::invalid_argument("mode labels are 1-based; got " + std::to_string(mode));
  }
  if (!std::isfinite(phase)) {
    throw std::domain_error("phase must be finite");
  }
  require_unit_interval(loss, "loss");
  return Element(ElementKind::PhaseShifter, mode, mode, 0.0, phase, loss);
}

Element Element::with_reflectivity(double reflectivity) const {
  if (!is_two_mode()) {
    throw std::logic_error("phase shifters have no reflectivity");
  }
  require_unit_interval(reflectivity, "reflectivity");
  Element copy = *this;
  copy.reflectivity_ = reflectivity;
  return copy;
}

Element Element::with_loss(double loss) const {
  if (is_two_mode()) {
    throw std::logic_error("only phase shifters carry loss");
  }
  require_unit_interval(loss, "loss");
  Element copy = *this;
  copy.loss_ = loss;
  return copy;
}

Element Element::with_phase(double phase) const {
  if (is_two_mode()) {
    throw std::logic_error("only phase shifters carry a phase");
  }
  Element copy = *this;
  copy.phase_ = phase;
  return copy;
}

Element Element::shifted(int offset) const {
  if (first_ + offset < 1) {
    throw std::invalid_argument("shift moves element below mode 1");
  }
  Element copy = *this;
  copy.first_ += offset;
  copy.second_ += offset;
  return copy;
}

Eigen::MatrixXcd element_block(const Element& e) {
  if (e.is_two_mode()) {
    const double r = std::sqrt(e.reflectivity());
    const double t = std::sqrt(1.0 - e.reflectivity());
    Eigen::MatrixXcd block(2, 2);
    block << r, t, t, -r;
    return block;
  }
  Eigen::MatrixXcd block(1, 1);
  block(0, 0) = std::polar(1.0, e.phase()) * std::sqrt(1.0 - e.loss());
  return block;
}

}  // namespace multiport
