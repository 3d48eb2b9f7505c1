#include <doctest.h>

#include <random>

#include "ecal/mlp_cost.hpp"
#include "oracle/mlp_graph_oracle.hpp"

using namespace ecal;

namespace {
const MlpArchitecture kDefaultNet({6, 5, 5, 5, 3});
}

TEST_CASE("forward pass FLOPs") {
  CHECK(forward_flops(kDefaultNet).value() == 226);
  CHECK(forward_flops(MlpArchitecture({1, 1})).value() == 4);
  CHECK(forward_flops(MlpArchitecture::uniform(6, 3, 5, 3)) == forward_flops(kDefaultNet));
}

TEST_CASE("training and inference FLOPs") {
  CHECK(training_forward_flops(kDefaultNet, 10, 256).value() == 578560);
  CHECK(training_forward_flops(kDefaultNet, 10, 179).value() == 404540);
  CHECK(training_total_flops(FlopCount(404540)).value() == 1213620);
  CHECK(inference_flops(kDefaultNet, 77).value() == 17402);
  CHECK(inference_flops(kDefaultNet, 0).value() == 0);
  CHECK_THROWS_AS(training_forward_flops(kDefaultNet, 0, 100), InvalidArgument);
}

TEST_CASE("architecture validation") {
  CHECK_THROWS_AS(MlpArchitecture({6}), InvalidArgument);
  CHECK_THROWS_AS(MlpArchitecture({6, 0, 3}), InvalidArgument);
  CHECK_THROWS_AS(MlpArchitecture({}), InvalidArgument);
}

TEST_CASE("train split") {
  const auto s = make_split(256, 0.7);
  CHECK(s.n_s_t == 179);
  CHECK(s.n_s_e == 77);
  CHECK(make_split(100, 0.29).n_s_t == 29);
  CHECK(make_split(10, 1.0).n_s_e == 0);
  CHECK(make_split(0, 0.5).n_s_t == 0);
  CHECK_THROWS_AS(make_split(10, 0.0), InvalidArgument);
  CHECK_THROWS_AS(make_split(10, 1.1), InvalidArgument);
  CHECK_THROWS_AS(make_split(10, -0.3), InvalidArgument);
}

TEST_CASE("energies for the default network") {
  const ProcessingUnitProfile pu;
  const auto tr = training_energy(kDefaultNet, 10, 179, pu, 64);
  CHECK(tr.e_train.value() == doctest::Approx(0.007905804182137972).epsilon(1e-12));
  CHECK(tr.e_train_b.value() == doctest::Approx(678.0 / (64.0 * 1.5351e8)).epsilon(1e-12));
  const auto ev = evaluation_energy(kDefaultNet, 77, pu, 64);
  CHECK(ev.e_eval.value() == doctest::Approx(1.1336069311445508e-4).epsilon(1e-12));
  CHECK(inference_energy(kDefaultNet, 77, pu) == ev.e_eval);
}

TEST_CASE("evaluation and inference per-bit energy coincide") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> width(1, 64), n(0, 5000);
  std::uniform_real_distribution<double> fpj(1e6, 1e12);
  for (int i = 0; i < 200; ++i) {
    const MlpArchitecture a({width(rng), width(rng), width(rng)});
    ProcessingUnitProfile pu;
    pu.flops_per_joule = fpj(rng);
    const std::uint32_t alpha = i % 2 ? 32 : 64;
    CHECK(evaluation_energy(a, n(rng), pu, alpha).e_eval_b == inference_energy_per_bit(a, pu, alpha));
  }
}

TEST_CASE("per-bit training energy ignores epochs and samples") {
  const ProcessingUnitProfile pu;
  const auto a = training_energy(kDefaultNet, 1, 10, pu, 64);
  const auto b = training_energy(kDefaultNet, 50, 1024, pu, 64);
  CHECK(a.e_train_b == b.e_train_b);
  CHECK(b.e_train.value() > a.e_train.value());
}

TEST_CASE("property: closed form matches a graph walk on random architectures") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> depth(2, 8);
  std::uniform_int_distribution<std::uint64_t> width(1, 40);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> layers(depth(rng));
    for (auto& w : layers) w = width(rng);
    CHECK(forward_flops(MlpArchitecture(layers)).value() == oracle::mlp_forward_flops_by_graph_walk(layers));
  }
}

TEST_CASE("property: FLOPs are quadratic in width and linear in depth") {
  for (std::uint64_t k = 1; k <= 10; ++k) {
    // second difference in M is constant 4(K - 1) for K hidden layers of width M
    for (std::uint64_t m = 1; m <= 18; ++m) {
      const auto f0 = static_cast<std::int64_t>(forward_flops(MlpArchitecture::uniform(6, k, m, 3)).value());
      const auto f1 = static_cast<std::int64_t>(forward_flops(MlpArchitecture::uniform(6, k, m + 1, 3)).value());
      const auto f2 = static_cast<std::int64_t>(forward_flops(MlpArchitecture::uniform(6, k, m + 2, 3)).value());
      CHECK(f2 - 2 * f1 + f0 == static_cast<std::int64_t>(4 * (k - 1)));
    }
  }
  for (std::uint64_t m = 1; m <= 20; ++m) {
    // each extra hidden layer adds 2M^2 + 2M
    for (std::uint64_t k = 1; k < 10; ++k) {
      const auto d = forward_flops(MlpArchitecture::uniform(6, k + 1, m, 3)).value() -
                     forward_flops(MlpArchitecture::uniform(6, k, m, 3)).value();
      CHECK(d == 2 * m * m + 2 * m);
    }
  }
}

TEST_CASE("property: training FLOPs are linear in epochs and samples") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::uint64_t> e(1, 60), n(0, 2000);
  for (int i = 0; i < 200; ++i) {
    const auto ep = e(rng), ns = n(rng);
    const auto base = training_forward_flops(kDefaultNet, ep, ns).value();
    CHECK(training_forward_flops(kDefaultNet, 2 * ep, ns).value() == 2 * base);
    CHECK(training_forward_flops(kDefaultNet, ep, ns + 1).value() == base + 226 * ep);
  }
}
