#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "multiport/element.hpp"

namespace multiport {

using TransferMatrix = Eigen::MatrixXcd;
using AmplitudeVector = Eigen::VectorXcd;

/// Elements that run in parallel. No two elements may touch the same mode.
class Layer {
 public:
  Layer() = default;
  explicit Layer(std::vector<Element> elements);
  Layer(std::initializer_list<Element> elements);

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool phase_only() const;
  /// Largest mode label touched, 0 for an empty layer.
  int max_mode() const;

  /// Appends the elements of `other`; throws if supports overlap.
  void merge(const Layer& other);
  Layer shifted(int offset) const;

  bool operator==(const Layer&) const = default;

 private:
  std::vector<Element> elements_;
};

/// Ordered layers on `modes` waveguides; layers().front() is applied first.
class Circuit {
 public:
  explicit Circuit(int modes);
  Circuit(int modes, std::vector<Layer> layers);

  int modes() const { return modes_; }
  const std::vector<Layer>& layers() const { return layers_; }

  void append(Layer layer);
  void append(const Circuit& tail);

  /// Runs `top` on modes 1..top.modes() and `bottom` on the modes below it,
  /// pairing their layers index by index.
  static Circuit side_by_side(const Circuit& top, const Circuit& bottom);

  /// Embeds this circuit into a wider one, moving every mode down by `offset`.
  Circuit embedded(int total_modes, int offset) const;

  bool operator==(const Circuit&) const = default;

 private:
  void check_layer(const Layer& layer) const;

  int modes_;
  std::vector<Layer> layers_;
};

/// M = M_L ... M_2 M_1 with layer 1 applied first.
TransferMatrix circuit_matrix(const Circuit& c);

/// Streams 2x2 / 1x1 block updates over the amplitudes; equals circuit_matrix(c) * v.
AmplitudeVector apply(const Circuit& c, const AmplitudeVector& v);
void apply_in_place(const Circuit& c, std::span<std::complex<double>> amplitudes);

std::size_t element_count(const Circuit& c);

/// Column depth of the layered circuit. Every non-empty layer is one column,
/// except that a layer holding only phase shifters shares its column with the
/// following layer when their modes are disjoint.
int depth(const Circuit& c);

/// Reverses the layer order and negates phases. Couplers are self-inverse.
/// Throws std::domain_error if any phase shifter is lossy.
Circuit inverse(const Circuit& c);

/// Permutation realized by a circuit built only from ideal swaps:
/// result[k] is the 1-based output mode that input mode k + 1 reaches.
std::vector<int> swap_permutation(const Circuit& c);

}  // namespace multiport
