#include "multiport/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace multiport {
namespace {

void mark_modes(const Element& e, std::vector<char>& used) {
  const auto touch = [&](int mode) {
    if (static_cast<std::size_t>(mode) >= used.size()) {
      used.resize(mode + 1, 0);
    }
    if (used[mode]) {
      throw std::invalid_argument("layer elements overlap on mode " + std::to_string(mode));
    }
    used[mode] = 1;
  };
  touch(e.first_mode());
  if (e.is_two_mode()) {
    touch(e.second_mode());
  }
}

void check_disjoint(const std::vector<Element>& elements) {
  std::vector<char> used;
  for (const auto& e : elements) {
    mark_modes(e, used);
  }
}

bool disjoint(const Layer& a, const Layer& b) {
  std::vector<char> used(std::max(a.max_mode(), b.max_mode()) + 1, 0);
  for (const auto& e : a.elements()) {
    used[e.first_mode()] = 1;
    used[e.second_mode()] = 1;
  }
  return std::none_of(b.elements().begin(), b.elements().end(), [&](const Element& e) {
    return used[e.first_mode()] || used[e.second_mode()];
  });
}

}  // namespace

Layer::Layer(std::vector<Element> elements) : elements_(std::move(elements)) {
  check_disjoint(elements_);
}

Layer::Layer(std::initializer_list<Element> elements) : Layer(std::vector<Element>(elements)) {}

bool Layer::phase_only() const {
  return !elements_.empty() && std::none_of(elements_.begin(), elements_.end(),
                                            [](const Element& e) { return e.is_two_mode(); });
}

int Layer::max_mode() const {
  int m = 0;
  for (const auto& e : elements_) m = std::max(m, e.second_mode());
  return m;
}

void Layer::merge(const Layer& other) {
  std::vector<Element> combined = elements_;
  combined.insert(combined.end(), other.elements_.begin(), other.elements_.end());
  check_disjoint(combined);
  elements_ = std::move(combined);
}

Layer Layer::shifted(int offset) const {
  std::vector<Element> moved;
  moved.reserve(elements_.size());
  for (const auto& e : elements_) moved.push_back(e.shifted(offset));
  return Layer(std::move(moved));
}

Circuit::Circuit(int modes) : modes_(modes) {
  if (modes < 1) {
    throw std::invalid_argument("a circuit needs at least one mode");
  }
}

Circuit::Circuit(int modes, std::vector<Layer> layers) : Circuit(modes) {
  for (const auto& layer : layers) check_layer(layer);
  layers_ = std::move(layers);
}

void Circuit::check_layer(const Layer& layer) const {
  if (layer.max_mode() > modes_) {
    throw std::invalid_argument("element on mode " + std::to_string(layer.max_mode()) +
                                " exceeds circuit width " + std::to_string(modes_));
  }
}

void Circuit::append(Layer layer) {
  check_layer(layer);
  layers_.push_back(std::move(layer));
}

void Circuit::append(const Circuit& tail) {
  if (tail.modes_ != modes_) {
    throw std::invalid_argument("cannot concatenate circuits of different widths");
  }
  layers_.insert(layers_.end(), tail.layers_.begin(), tail.layers_.end());
}

Circuit Circuit::side_by_side(const Circuit& top, const Circuit& bottom) {
  Circuit out(top.modes_ + bottom.modes_);
  const std::size_t n = std::max(top.layers_.size(), bottom.layers_.size());
  out.layers_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Layer layer = k < top.layers_.size() ? top.layers_[k] : Layer{};
    if (k < bottom.layers_.size()) {
      layer.merge(bottom.layers_[k].shifted(top.modes_));
    }
    out.layers_.push_back(std::move(layer));
  }
  return out;
}

Circuit Circuit::embedded(int total_modes, int offset) const {
  if (offset < 0 || offset + modes_ > total_modes) {
    throw std::invalid_argument("embedding does not fit");
  }
  Circuit out(total_modes);
  out.layers_.reserve(layers_.size());
  for (const auto& layer : layers_) out.layers_.push_back(layer.shifted(offset));
  return out;
}

TransferMatrix circuit_matrix(const Circuit& c) {
  const int d = c.modes();
  TransferMatrix m = TransferMatrix::Identity(d, d);
  // Left-multiplying by each layer touches only the rows of its modes.
  for (const auto& layer : c.layers()) {
    for (const auto& e : layer.elements()) {
      const auto block = element_block(e);
      const int i = e.first_mode() - 1;
      if (e.is_two_mode()) {
        const Eigen::MatrixXcd rows = m.middleRows(i, 2);
        m.middleRows(i, 2) = block * rows;
      } else {
        m.row(i) *= block(0, 0);
      }
    }
  }
  return m;
}

void apply_in_place(const Circuit& c, std::span<std::complex<double>> v) {
  if (v.size() != static_cast<std::size_t>(c.modes())) {
    throw std::invalid_argument("amplitude vector has dimension " + std::to_string(v.size()) +
                                ", circuit has " + std::to_string(c.modes()) + " modes");
  }
  for (const auto& layer : c.layers()) {
    for (const auto& e : layer.elements()) {
      const std::size_t i = e.first_mode() - 1;
      if (e.is_two_mode()) {
        const double r = std::sqrt(e.reflectivity());
        const double t = std::sqrt(1.0 - e.reflectivity());
        const auto a = v[i];
        const auto b = v[i + 1];
        v[i] = r * a + t * b;
        v[i + 1] = t * a - r * b;
      } else {
        v[i] *= std::polar(1.0, e.phase()) * std::sqrt(1.0 - e.loss());
      }
    }
  }
}

AmplitudeVector apply(const Circuit& c, const AmplitudeVector& v) {
  AmplitudeVector out = v;
  apply_in_place(c, std::span(out.data(), static_cast<std::size_t>(out.size())));
  return out;
}

std::size_t element_count(const Circuit& c) {
  return std::accumulate(c.layers().begin(), c.layers().end(), std::size_t{0},
                         [](std::size_t n, const Layer& l) { return n + l.size(); });
}

int depth(const Circuit& c) {
  int columns = 0;
  std::optional<Layer> phase_column;
  for (const auto& layer : c.layers()) {
    if (layer.empty()) continue;
    if (phase_column && disjoint(*phase_column, layer)) {
      if (layer.phase_only()) {
        phase_column->merge(layer);
      } else {
        phase_column.reset();
      }
      continue;
    }
    ++columns;
    if (layer.phase_only()) {
      phase_column = layer;
    } else {
      phase_column.reset();
    }
  }
  return columns;
}

Circuit inverse(const Circuit& c) {
  std::vector<Layer> reversed;
  reversed.reserve(c.layers().size());
  for (auto it = c.layers().rbegin(); it != c.layers().rend(); ++it) {
    std::vector<Element> elements;
    elements.reserve(it->size());
    for (const auto& e : it->elements()) {
      if (e.is_two_mode()) {
        elements.push_back(e);
        continue;
      }
      if (e.loss() != 0.0) {
        throw std::domain_error("cannot invert a lossy phase shifter");
      }
      elements.push_back(e.with_phase(-e.phase()));
    }
    reversed.emplace_back(std::move(elements));
  }
  return Circuit(c.modes(), std::move(reversed));
}

std::vector<int> swap_permutation(const Circuit& c) {
  // position[k] holds the input mode currently sitting on waveguide k.
  std::vector<int> position(c.modes());
  std::iota(position.begin(), position.end(), 1);
  for (const auto& layer : c.layers()) {
    for (const auto& e : layer.elements()) {
      if (e.kind() != ElementKind::Swap || e.reflectivity() != 0.0) {
        throw std::invalid_argument("swap_permutation requires ideal swaps only");
      }
      std::swap(position[e.first_mode() - 1], position[e.second_mode() - 1]);
    }
  }
  std::vector<int> destination(c.modes());
  for (int k = 0; k < c.modes(); ++k) destination[position[k] - 1] = k + 1;
  return destination;
}

}  // namespace multiport
