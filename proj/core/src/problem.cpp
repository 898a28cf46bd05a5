#include "bayesbound/problem.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bayesbound {

void DiscreteProblem::validate() const {
  if (channel.empty()) throw std::invalid_argument("problem.channel: empty");
  const std::size_t m = channel[0].size();
  for (std::size_t i = 0; i < channel.size(); ++i)
    if (channel[i].size() != m)
      throw std::invalid_argument("problem.channel[" + std::to_string(i) +
                                  "]: alphabet size mismatch");
  if (prior.size() != channel.size())
    throw std::invalid_argument("problem.prior: size mismatch with channel");
  double sum = 0.0;
  for (std::size_t i = 0; i < prior.size(); ++i) {
    if (!(prior[i] >= 0.0))
      throw std::invalid_argument("problem.prior[" + std::to_string(i) + "]: negative weight");
    sum += prior[i];
  }
  if (std::fabs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("problem.prior: does not sum to 1");
  if (loss.size() != channel.size())
    throw std::invalid_argument("problem.loss: row count mismatch with channel");
  const std::size_t a = loss.empty() ? 0 : loss[0].size();
  if (a == 0) throw std::invalid_argument("problem.loss: no actions");
  for (std::size_t i = 0; i < loss.size(); ++i) {
    if (loss[i].size() != a)
      throw std::invalid_argument("problem.loss[" + std::to_string(i) + "]: column mismatch");
    for (std::size_t j = 0; j < a; ++j)
      if (!(loss[i][j] >= 0.0))
        throw std::invalid_argument("problem.loss[" + std::to_string(i) + "][" +
                                    std::to_string(j) + "]: negative entry");
  }
}

bool DiscreteProblem::zero_one_loss() const {
  for (const auto& row : loss)
    for (double v : row)
      if (v != 0.0 && v != 1.0) return false;
  return true;
}

DiscreteDistribution DiscreteProblem::marginal() const {
  std::vector<double> m(alphabet_size(), 0.0);
  for (std::size_t t = 0; t < channel.size(); ++t)
    for (std::size_t x = 0; x < m.size(); ++x) m[x] += prior[t] * channel[t][x];
  return DiscreteDistribution::normalized(std::move(m));
}

}  // namespace bayesbound
