#include "p2quot/survey.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "p2quot/six.hpp"

namespace p2quot {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t stream_for(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL * (index + 1));
    splitmix64(s);
    return s;
}

int pick_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, total) into per-worker ranges and runs `body(begin, end)` on
// each; `body` must only touch worker-local state until the final merge.
template <typename Body>
void run_partitioned(std::uint64_t total, int threads, Body body) {
    if (threads <= 1 || total < 2) {
        body(0, total, 0);
        return;
    }
    std::vector<std::thread> pool;
    std::uint64_t chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::uint64_t begin = chunk * t;
        std::uint64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([=] { body(begin, end, t); });
    }
    for (std::thread& th : pool) th.join();
}

std::string weights_str(const std::array<int, 6>& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
    return out.str();
}

}  // namespace

VerifySixResult verify_six(std::uint64_t samples, int max_weight,
                           std::uint64_t seed, int threads) {
    if (max_weight < 1) throw std::invalid_argument("max_weight must be at least 1");
    int workers = pick_threads(threads);

    std::mutex merge_mutex;
    VerifySixResult result;
    result.samples = samples;

    run_partitioned(samples, workers, [&](std::uint64_t begin, std::uint64_t end, int) {
        std::uint64_t local_matches = 0;
        std::vector<std::string> local_mismatches;
        for (std::uint64_t i = begin; i < end; ++i) {
            std::uint64_t state = stream_for(seed, i);
            std::array<int, 6> w{};
            // Redraw until every weight is strictly under a third of the
            // total, so the closed form applies.
            for (;;) {
                long long total = 0;
                for (int& x : w) {
                    x = 1 + static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(max_weight));
                    total += x;
                }
                bool ok = true;
                for (int x : w)
                    if (3LL * x >= total) { ok = false; break; }
                if (ok) break;
            }
            Polarization m = Polarization::from_ints(std::vector<long long>(w.begin(), w.end()));
            EngineOptions opts;
            opts.seed = splitmix64(state);
            Poly via_path = ip(m, opts);
            Poly closed = ip_closed_form(m);
            if (via_path == closed) {
                ++local_matches;
            } else if (local_mismatches.size() < 8) {
                local_mismatches.push_back(weights_str(w) + ": path " + via_path.str() +
                                           " vs closed form " + closed.str());
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        result.matches += local_matches;
        for (std::string& s : local_mismatches)
            if (result.mismatches.size() < 8) result.mismatches.push_back(std::move(s));
    });
    return result;
}

ChamberSurvey chamber_survey(int n, std::uint64_t samples, int max_weight,
                             std::uint64_t seed, int threads) {
    if (n < 5 || n > 20) throw std::invalid_argument("chamber survey supports 5 <= n <= 20");
    if (max_weight < 1) throw std::invalid_argument("max_weight must be at least 1");
    int workers = pick_threads(threads);

    // Wall subsets K with 2 <= |K| <= n-3, as bitmasks over sorted weights.
    std::vector<std::uint32_t> wall_masks;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size >= 2 && size <= n - 3) wall_masks.push_back(mask);
    }

    std::mutex merge_mutex;
    std::set<std::vector<signed char>> fingerprints;
    std::uint64_t chamber_hits = 0;

    run_partitioned(samples, workers, [&](std::uint64_t begin, std::uint64_t end, int) {
        std::set<std::vector<signed char>> local_fps;
        std::uint64_t local_hits = 0;
        std::vector<long long> w(n);
        std::vector<signed char> fp(wall_masks.size());
        for (std::uint64_t i = begin; i < end; ++i) {
            std::uint64_t state = stream_for(seed, i);
            long long total = 0;
            for (long long& x : w) {
                x = 1 + static_cast<long long>(splitmix64(state) % static_cast<std::uint64_t>(max_weight));
                total += x;
            }
            std::sort(w.begin(), w.end(), std::greater<>());
            if (3 * w.front() >= total) continue;  // not inside a chamber
            bool on_wall = false;
            for (std::size_t k = 0; k < wall_masks.size(); ++k) {
                long long sum = 0;
                std::uint32_t mask = wall_masks[k];
                while (mask) {
                    int bit = std::countr_zero(mask);
                    sum += w[bit];
                    mask &= mask - 1;
                }
                long long gamma = total - 3 * sum;
                if (gamma == 0) { on_wall = true; break; }
                fp[k] = gamma > 0 ? 1 : -1;
            }
            if (on_wall) continue;
            ++local_hits;
            local_fps.insert(fp);
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        chamber_hits += local_hits;
        fingerprints.insert(local_fps.begin(), local_fps.end());
    });

    ChamberSurvey survey;
    survey.samples = samples;
    survey.chamber_hits = chamber_hits;
    survey.distinct = fingerprints.size();
    return survey;
}

}  // namespace p2quot
