#include "support.hpp"

#include <complex>
#include <numbers>
#include <vector>

namespace multiport::fixtures {

Eigen::MatrixXcd dense_product_matrix(const Circuit& c) {
  const int d = c.modes();
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(d, d);
  for (const auto& layer : c.layers()) {
    for (const auto& e : layer.elements()) {
      Eigen::MatrixXcd step = Eigen::MatrixXcd::Identity(d, d);
      const int i = e.first_mode() - 1;
      if (e.is_two_mode()) {
        const double r = e.reflectivity();
        step(i, i) = std::sqrt(r);
        step(i, i + 1) = std::sqrt(1.0 - r);
        step(i + 1, i) = std::sqrt(1.0 - r);
        step(i + 1, i + 1) = -std::sqrt(r);
      } else {
        step(i, i) = std::exp(std::complex<double>(0.0, e.phase())) * std::sqrt(1.0 - e.loss());
      }
      total = step * total;
    }
  }
  return total;
}

Circuit random_circuit(int modes, int layers, std::mt19937_64& rng, bool lossy) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  Circuit out(modes);
  for (int l = 0; l < layers; ++l) {
    std::vector<Element> elements;
    int m = 1;
    while (m <= modes) {
      const double pick = unit(rng);
      if (pick < 0.35 && m < modes) {
        elements.push_back(Element::beam_splitter(m, m + 1, unit(rng)));
        m += 2;
      } else if (pick < 0.55 && m < modes) {
        elements.push_back(Element::swap(m, m + 1, lossy ? 0.1 * unit(rng) : 0.0));
        m += 2;
      } else if (pick < 0.8) {
        elements.push_back(Element::phase_shifter(m, angle(rng), lossy ? 0.3 * unit(rng) : 0.0));
        m += 1;
      } else {
        m += 1;
      }
    }
    out.append(Layer(std::move(elements)));
  }
  return out;
}

Eigen::VectorXcd random_vector(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::VectorXcd v(d);
  for (int k = 0; k < d; ++k) v(k) = {normal(rng), normal(rng)};
  return v / v.norm();
}

Circuit decompose_unitary(const Eigen::MatrixXcd& u) {
  const int d = static_cast<int>(u.rows());
  Eigen::MatrixXcd work = u;

  struct Nulling {
    int row;  // 0-based upper row of the pair
    double reflectivity;
    double alpha;
  };
  std::vector<Nulling> steps;

  for (int col = 0; col + 1 < d; ++col) {
    for (int r = d - 1; r > col; --r) {
      const auto a = work(r - 1, col);
      const auto b = work(r, col);
      if (std::abs(b) < 1e-15) continue;
      const double na = std::norm(a);
      const double nb = std::norm(b);
      const double eps = na / (na + nb);
      const double alpha = std::abs(a) > 0.0 ? std::arg(b) - std::arg(a) : 0.0;
      const auto shift = std::polar(1.0, alpha);
      const double s = std::sqrt(eps);
      const double t = std::sqrt(1.0 - eps);
      for (int k = 0; k < d; ++k) {
        const auto x = shift * work(r - 1, k);
        const auto y = work(r, k);
        work(r - 1, k) = s * x + t * y;
        work(r, k) = t * x - s * y;
      }
      steps.push_back({r - 1, eps, alpha});
    }
  }

  // u = T_1^-1 ... T_K^-1 D, so D runs first and the inverted steps follow
  // in reverse. T^-1 = diag(e^{-i alpha}, 1) B.
  Circuit out(d);
  std::vector<Element> diagonal;
  for (int k = 0; k < d; ++k) diagonal.push_back(Element::phase_shifter(k + 1, std::arg(work(k, k))));
  out.append(Layer(std::move(diagonal)));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    out.append(Layer{Element::beam_splitter(it->row + 1, it->row + 2, it->reflectivity)});
    out.append(Layer{Element::phase_shifter(it->row + 1, -it->alpha)});
  }
  return out;
}

}  // namespace multiport::fixtures
