#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

#include <Eigen/Core>

namespace multiport {

enum class ElementKind : std::uint8_t { BeamSplitter, Swap, PhaseShifter };

std::string_view to_string(ElementKind kind);

/// A single optical primitive on 1-based mode labels.
///
/// Beam splitters and swaps couple two adjacent modes (first, first + 1) and
/// carry a reflectivity. A swap is physically a beam splitter with vanishing
/// reflectivity; it is kept as its own kind because fabrication noise treats
/// it differently. Phase shifters act on one mode and may carry an
/// absorptivity (loss) that scales the mode amplitude by sqrt(1 - loss).
class Element {
 public:
  static Element beam_splitter(int first, int second, double reflectivity = 0.5);
  static Element swap(int first, int second, double reflectivity = 0.0);
  static Element phase_shifter(int mode, double phase, double loss = 0.0);

  ElementKind kind() const { return kind_; }
  int first_mode() const { return first_; }
  /// Equal to first_mode() for phase shifters.
  int second_mode() const { return second_; }
  bool is_two_mode() const { return kind_ != ElementKind::PhaseShifter; }

  double reflectivity() const { return reflectivity_; }
  double phase() const { return phase_; }
  double loss() const { return loss_; }

  Element with_reflectivity(double reflectivity) const;
  Element with_loss(double loss) const;
  Element with_phase(double phase) const;
  Element shifted(int offset) const;

  bool operator==(const Element&) const = default;

 private:
  Element(ElementKind kind, int first, int second, double reflectivity, double phase,
          double loss);

  ElementKind kind_;
  int first_;
  int second_;
  double reflectivity_;
  double phase_;
  double loss_;
};

/// Coupler block [[sqrt(r), sqrt(1-r)], [sqrt(1-r), -sqrt(r)]] for two-mode
/// elements, or the 1x1 scalar exp(i*phase) * sqrt(1 - loss) for phase shifters.
Eigen::MatrixXcd element_block(const Element& e);

}  // namespace multiport
