#pragma once

// Independent FLOP count for an MLP forward pass: materialize every neuron
// and every edge of the fully connected graph and walk them. Each edge costs
// a multiply and an add; each non-input neuron costs the incoming sum and
// the activation.

#include <cstdint>
#include <utility>
#include <vector>

namespace ecal::oracle {

inline std::uint64_t mlp_forward_flops_by_graph_walk(const std::vector<std::uint64_t>& layers) {
  struct Neuron {
    std::size_t layer;
  };
  std::vector<Neuron> neurons;
  std::vector<std::vector<std::size_t>> ids(layers.size());
  for (std::size_t l = 0; l < layers.size(); ++l) {
    for (std::uint64_t i = 0; i < layers[l]; ++i) {
      ids[l].push_back(neurons.size());
      neurons.push_back({l});
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t l = 1; l < layers.size(); ++l) {
    for (auto from : ids[l - 1]) {
      for (auto to : ids[l]) edges.emplace_back(from, to);
    }
  }

  std::uint64_t flops = 0;
  for (const auto& edge : edges) {
    (void)edge;
    flops += 2;
  }
  for (const auto& n : neurons) {
    if (n.layer > 0) flops += 2;
  }
  return flops;
}

}  // namespace ecal::oracle
