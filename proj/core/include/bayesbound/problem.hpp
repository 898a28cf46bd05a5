#pragma once

#include <string>
#include <vector>

#include "bayesbound/distribution.hpp"

namespace bayesbound {

// A finite statistical decision problem: N hypotheses emitting observations
// from an alphabet of size m through `channel`, prior weights over the
// hypotheses, and an N x A loss matrix. The exactly-solvable testbed.
struct DiscreteProblem {
  std::vector<DiscreteDistribution> channel;  // row theta = P_theta
  std::vector<double> prior;                  // N nonnegative, sums to 1
  std::vector<std::vector<double>> loss;      // N x A, entries >= 0

  std::vector<std::string> theta_labels;  // optional
  std::vector<std::string> obs_labels;    // optional
  std::vector<std::string> action_labels; // optional

  std::size_t num_hypotheses() const { return channel.size(); }
  std::size_t alphabet_size() const { return channel.empty() ? 0 : channel[0].size(); }
  std::size_t num_actions() const { return loss.empty() ? 0 : loss[0].size(); }

  void validate() const;  // throws std::invalid_argument with a path-style message
  bool zero_one_loss() const;

  // Prior-weighted observation marginal, sum_theta w(theta) P_theta.
  DiscreteDistribution marginal() const;
};

}  // namespace bayesbound
