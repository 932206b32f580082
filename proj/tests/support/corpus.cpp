#include "corpus.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "homeo/classify.hpp"
#include "homeo/errors.hpp"

namespace homeo::testing {

std::vector<IONetwork> random_core_corpus(const CorpusOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> size(opt.min_nodes, opt.max_nodes);
  std::uniform_real_distribution<double> density(0.15, 0.55);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  std::vector<IONetwork> out;
  while (out.size() < opt.count) {
    const std::size_t n = size(rng);
    const bool threaded = coin(rng) < 0.5;
    const double p = threaded ? 0.5 * density(rng) : density(rng);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("n" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> arrows;
    if (threaded) {
      // A random input-output path through some of the inner nodes.
      std::vector<std::size_t> inner;
      for (std::size_t i = 1; i + 1 < n; ++i) inner.push_back(i);
      std::shuffle(inner.begin(), inner.end(), rng);
      inner.resize(std::uniform_int_distribution<std::size_t>(0, inner.size())(rng));
      std::size_t prev = 0;
      for (std::size_t i : inner) {
        arrows.emplace_back(names[prev], names[i]);
        prev = i;
      }
      arrows.emplace_back(names[prev], names.back());
    }
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t h = 0; h < n; ++h)
        if (t != h && coin(rng) < p) arrows.emplace_back(names[t], names[h]);

    IONetwork net(names, names.front(), names.back(), arrows);
    if (!validate_core(net).is_core) continue;
    try {
      (void)enumerate_io_simple_paths(net, opt.path_cap);
    } catch (const PathExplosion&) {
      continue;
    }
    out.push_back(std::move(net));
  }
  return out;
}

}  // namespace homeo::testing
