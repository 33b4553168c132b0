// Times the parallel kernels against their serial references on a synthetic
// corpus and checks they produce identical results along the way.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "wlbound/coloring.hpp"
#include "wlbound/partition.hpp"
#include "wlbound/rademacher.hpp"
#include "wlbound/synth.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* name, double serial_s, double parallel_s, bool equal) {
    std::printf("%-18s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   results %s\n", name,
                serial_s, parallel_s, serial_s / parallel_s, equal ? "equal" : "DIFFER");
}

} // namespace

int main(int argc, char** argv) {
    std::size_t graphs = 2000;
    std::uint32_t nodes = 50;
    double edge_prob = 0.1;
    std::uint64_t trials = 200000;
    std::uint64_t seed = 1;

    CLI::App app{"compare serial and parallel kernels"};
    app.add_option("--graphs", graphs, "corpus size (default 2000)");
    app.add_option("--nodes", nodes, "nodes per graph (default 50)");
    app.add_option("--edge-prob", edge_prob, "edge probability (default 0.1)");
    app.add_option("--trials", trials, "Monte Carlo trials (default 200000)");
    app.add_option("--seed", seed, "corpus seed (default 1)");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif

    wlb::RandomSampleSpec spec;
    spec.family = wlb::RandomSampleSpec::Family::erdos_renyi;
    spec.nodes = nodes;
    spec.edge_probability = edge_prob;
    spec.count = graphs;
    spec.seed = seed;
    const wlb::GraphSample sample = wlb::generate_sample(spec);
    std::printf("corpus: %zu graphs, %u nodes each\n", graphs, nodes);

    auto start = std::chrono::steady_clock::now();
    const wlb::WlRefinement serial = wlb::wl_refine_serial(sample);
    const double refine_serial_s = seconds_since(start);

    start = std::chrono::steady_clock::now();
    const wlb::WlRefinement parallel = wlb::wl_refine(sample);
    const double refine_parallel_s = seconds_since(start);
    report("refinement", refine_serial_s, refine_parallel_s,
           serial.histograms == parallel.histograms &&
               serial.coloring.colors == parallel.coloring.colors);

    const wlb::SamplePartition partition = wlb::partition_sample(parallel.histograms);
    std::printf("partition: m=%zu p=%zu\n", partition.m, partition.p);

    start = std::chrono::steady_clock::now();
    const wlb::RademacherEstimate mc_serial =
        wlb::mc_rademacher_serial(partition, trials, seed, 0.05);
    const double mc_serial_s = seconds_since(start);

    start = std::chrono::steady_clock::now();
    const wlb::RademacherEstimate mc_parallel = wlb::mc_rademacher(partition, trials, seed, 0.05);
    const double mc_parallel_s = seconds_since(start);
    report("monte carlo", mc_serial_s, mc_parallel_s, mc_serial.value == mc_parallel.value);

    std::printf("exact %.12f   estimate %.12f   half width %.12f\n",
                wlb::exact_rademacher(partition).value, mc_parallel.value,
                mc_parallel.confidence->half_width);
    return 0;
}
