#pragma once

#include "wlanul/throughput.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wlanul
{

/// Even a single one-MSDU MPDU does not fit the PPDU time limit.
class NoFeasiblePlan : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Largest MSDU count one MPDU may carry: bounded by the maximum MPDU size and by
/// the PPDU time limit for a single-MPDU A-MPDU. Returns 0 if even one MSDU fails.
int MaxMsdusPerMpdu(const CycleModel& model);

/**
 * Best balanced plan with exactly `mpdus` MPDUs: every allocation where the MSDU
 * counts differ by at most one, subject to the PPDU limit. Ties go to the plan with
 * fewer MSDUs. std::nullopt when no plan with that many MPDUs fits.
 */
std::optional<ThroughputReport> BestPlanForMpdus(const CycleModel& model, int mpdus);

/**
 * Maximum-throughput A-MPDU structure over X in 1..xMax and balanced allocations.
 * Ties are broken by smaller X, then fewer MSDUs. Throws NoFeasiblePlan.
 */
ThroughputReport BestPlan(const ScenarioSpec& spec,
                          const PhyCatalog& catalog,
                          const TimingConstants& tc,
                          int xMax);

/// BestPlan with xMax taken from the scenario's acknowledgment window.
ThroughputReport BestPlan(const ScenarioSpec& spec,
                          const PhyCatalog& catalog,
                          const TimingConstants& tc = DefaultTiming());

/// Element X-1 holds BestPlanForMpdus(X).
std::vector<std::optional<ThroughputReport>> ThroughputCurve(const ScenarioSpec& spec,
                                                             const PhyCatalog& catalog,
                                                             const TimingConstants& tc,
                                                             int xMax);

/**
 * Exhaustive optimum over every vector (Y_1..Y_X) in [1..yCap]^X for X <= xCap,
 * balanced or not. Only meant for small instances (xCap, yCap <= 6).
 */
ThroughputReport BruteForcePlan(const ScenarioSpec& spec,
                                const PhyCatalog& catalog,
                                const TimingConstants& tc,
                                int xCap,
                                int yCap);

struct McsOutcome
{
    int mcs{0};
    std::optional<ThroughputReport> report;
    std::string skipReason;
};

struct McsSweep
{
    std::vector<McsOutcome> byMcs;
    /// Index into byMcs of the best MCS, if any MCS produced a result.
    std::optional<std::size_t> best;

    const McsOutcome* Best() const
    {
        return best ? &byMcs[*best] : nullptr;
    }

    const McsOutcome* ForMcs(int mcs) const;
};

/// BestPlan for every applicable MCS of the template's flavor; the template's mcs is
/// ignored. Inapplicable MCSs appear with a skip reason. `jobs` > 1 evaluates MCSs
/// concurrently; the result does not depend on it.
McsSweep SweepMcs(const ScenarioSpec& tmpl,
                  const PhyCatalog& catalog,
                  const TimingConstants& tc = DefaultTiming(),
                  std::optional<int> xMax = std::nullopt,
                  int jobs = 1);

struct FlavorOutcome
{
    enum class Status
    {
        Computed,
        OutOfScope,
        NoResult,
    };

    ScenarioSpec spec; ///< mcs set to the best MCS when computed
    Status status{Status::Computed};
    std::string note;
    McsSweep sweep;

    const ThroughputReport* Best() const
    {
        auto b = sweep.Best();
        return b ? &*b->report : nullptr;
    }
};

/// The UL service strategies for `totalStations`: SU for a lone station, otherwise
/// triggered SU and every MU group size dividing the station count.
std::vector<Flavor> StrategiesFor(Standard standard, int totalStations);

/**
 * Best throughput and access delay for every strategy serving `totalStations`.
 * 11ac with more than one station yields a single OutOfScope entry: multi-station
 * CSMA/CA contention is not modeled.
 */
std::vector<FlavorOutcome> SweepFlavors(int totalStations,
                                        Standard standard,
                                        double ber,
                                        int msduLen,
                                        AckWindow window,
                                        const PhyCatalog& catalog,
                                        const TimingConstants& tc = DefaultTiming(),
                                        int jobs = 1,
                                        AckSizing sizing = AckSizing::Compact);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void ParallelFor(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

} // namespace wlanul
