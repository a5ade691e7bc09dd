#include <benchmark/benchmark.h>

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gis/digraph.hpp"
#include "gis/element.hpp"
#include "gis/output.hpp"
#include "gis/structure.hpp"

namespace {

gis::Digraph chain(int n) {
  std::string text;
  for (int i = 1; i <= n; ++i) {
    text += "vertex v" + std::to_string(i) + "\n";
  }
  for (int i = 1; i < n; ++i) {
    text += "edge e" + std::to_string(i) + " v" + std::to_string(i) + " v"
            + std::to_string(i + 1) + "\n";
  }
  return gis::parse_graph(text);
}

gis::Digraph loop() { return gis::parse_graph("vertex v\nedge e v v\n"); }

void bm_parse_graph(benchmark::State& state) {
  std::string text;
  for (int i = 0; i < 100; ++i) {
    text += "vertex v" + std::to_string(i) + "\n";
  }
  for (int i = 0; i < 99; ++i) {
    text += "edge e" + std::to_string(i) + " v" + std::to_string(i) + " v"
            + std::to_string(i + 1) + "\n";
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(gis::parse_graph(text));
  }
}
BENCHMARK(bm_parse_graph);

void bm_enumerate_chain(benchmark::State& state) {
  gis::Digraph g = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gis::enumerate(g, std::nullopt));
  }
}
BENCHMARK(bm_enumerate_chain)->Arg(4)->Arg(8)->Arg(12);

void bm_multiply_bicyclic(benchmark::State& state) {
  gis::Digraph g = loop();
  auto table = gis::enumerate(g, 8);
  auto const& els = table.elements();
  std::mt19937 rng(7);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (int i = 0; i < 512; ++i) {
    pairs.emplace_back(rng() % els.size(), rng() % els.size());
  }
  for (auto _ : state) {
    for (auto const& [i, j] : pairs) {
      benchmark::DoNotOptimize(gis::multiply(els[i], els[j]));
    }
  }
}
BENCHMARK(bm_multiply_bicyclic);

void bm_reduce_word(benchmark::State& state) {
  gis::Digraph g = chain(6);
  std::vector<gis::Generator> gens;
  for (gis::vertex_id v = 0; v < g.vertex_count(); ++v) {
    gens.push_back({gis::Generator::Kind::vertex, v});
  }
  for (gis::edge_id e = 0; e < g.edge_count(); ++e) {
    gens.push_back({gis::Generator::Kind::edge, e});
    gens.push_back({gis::Generator::Kind::ghost, e});
  }
  std::mt19937 rng(11);
  std::vector<gis::Word> words;
  for (int i = 0; i < 256; ++i) {
    gis::Word w;
    std::size_t len = 1 + rng() % 8;
    for (std::size_t k = 0; k < len; ++k) {
      w.push_back(gens[rng() % gens.size()]);
    }
    words.push_back(std::move(w));
  }
  for (auto _ : state) {
    for (auto const& w : words) {
      benchmark::DoNotOptimize(gis::reduce_word(g, w));
    }
  }
}
BENCHMARK(bm_reduce_word);

void bm_scc(benchmark::State& state) {
  int const n = static_cast<int>(state.range(0));
  std::string text;
  for (int i = 0; i < n; ++i) {
    text += "vertex v" + std::to_string(i) + "\n";
  }
  std::mt19937 rng(23);
  for (int i = 0; i < 4 * n; ++i) {
    text += "edge e" + std::to_string(i) + " v" + std::to_string(rng() % n)
            + " v" + std::to_string(rng() % n) + "\n";
  }
  for (auto _ : state) {
    gis::Digraph g = gis::parse_graph(text);
    benchmark::DoNotOptimize(g.scc());
  }
}
BENCHMARK(bm_scc)->Arg(64)->Arg(512);

void bm_idempotent_lattice(benchmark::State& state) {
  gis::Digraph g = chain(static_cast<int>(state.range(0)));
  auto table = gis::enumerate(g, std::nullopt);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gis::idempotent_lattice(table));
  }
}
BENCHMARK(bm_idempotent_lattice)->Arg(6)->Arg(10);

void bm_green_classes(benchmark::State& state) {
  gis::Digraph g = chain(8);
  auto table = gis::enumerate(g, std::nullopt);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gis::green_classes(table, gis::GreenRelation::D));
  }
}
BENCHMARK(bm_green_classes);

void bm_hasse_to_dot(benchmark::State& state) {
  gis::Digraph g = chain(8);
  auto h = gis::idempotent_lattice(gis::enumerate(g, std::nullopt));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gis::hasse_to_dot(g, h));
  }
}
BENCHMARK(bm_hasse_to_dot);

}  // namespace

BENCHMARK_MAIN();
