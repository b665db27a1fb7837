#include "wlanul/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace wlanul
{

namespace
{

struct Candidate
{
    double throughput{-1.0};
    int mpdus{0};
    int totalMsdus{0};
};

bool
Better(const Candidate& a, const Candidate& b)
{
    if (a.throughput != b.throughput)
    {
        return a.throughput > b.throughput;
    }
    if (a.mpdus != b.mpdus)
    {
        return a.mpdus < b.mpdus;
    }
    return a.totalMsdus < b.totalMsdus;
}

/// Evaluates balanced plans in O(1) each from per-MSDU-count tables.
class BalancedEvaluator
{
  public:
    BalancedEvaluator(const CycleModel& model, int yMax)
        : m_model(model),
          m_yMax(yMax)
    {
        const auto& spec = model.Spec();
        const auto& tc = model.Timing();
        const auto narrow = model.Breakdown(1, 0);
        const auto wide = model.Breakdown(65, 0);
        m_fixedNarrow = narrow.Total() - narrow.tData;
        m_fixedWide = wide.Total() - wide.tData;
        m_bits.resize(static_cast<std::size_t>(yMax) + 2);
        m_goodput.resize(static_cast<std::size_t>(yMax) + 2);
        for (int y = 1; y <= yMax + 1; ++y)
        {
            const auto c = MpduLenBits(y, spec.msduLen, tc);
            m_bits[y] = c;
            m_goodput[y] = 8.0 * y * spec.msduLen * MpduSuccessProbability(c, spec.ber);
        }
    }

    std::int64_t Bits(int mpdus, int base, int promoted) const
    {
        return (mpdus - promoted) * m_bits[base] + promoted * m_bits[base + 1];
    }

    bool Fits(int mpdus, int base, int promoted) const
    {
        return m_model.Fits(Bits(mpdus, base, promoted));
    }

    double Throughput(int mpdus, int base, int promoted) const
    {
        const auto& shape = m_model.Shape();
        const auto fixed = mpdus > 64 ? m_fixedWide : m_fixedNarrow;
        const auto cycle = fixed + PsduTxTime(Bits(mpdus, base, promoted),
                                                shape.ulRate,
                                                shape.ulSymbol,
                                                m_model.Timing());
        const double goodput = (mpdus - promoted) * m_goodput[base] + promoted * m_goodput[base + 1];
        return m_model.ThroughputMbps(goodput, cycle);
    }

    /// Largest number of MPDUs that can be promoted from `base` to base + 1.
    int MaxPromotions(int mpdus, int base) const
    {
        if (base >= m_yMax)
        {
            return 0;
        }
        int lo = 0;
        int hi = mpdus;
        while (lo < hi)
        {
            const int mid = (lo + hi + 1) / 2;
            if (Fits(mpdus, base, mid))
            {
                lo = mid;
            }
            else
            {
                hi = mid - 1;
            }
        }
        return lo;
    }

    int YMax() const
    {
        return m_yMax;
    }

  private:
    const CycleModel& m_model;
    int m_yMax;
    Duration m_fixedNarrow{};
    Duration m_fixedWide{};
    std::vector<std::int64_t> m_bits;
    std::vector<double> m_goodput;
};

struct BalancedChoice
{
    Candidate score;
    int base{0};
    int promoted{0};
};

std::optional<BalancedChoice>
BestBalanced(const BalancedEvaluator& eval, int mpdus)
{
    std::optional<BalancedChoice> best;
    for (int base = 1; base <= eval.YMax(); ++base)
    {
        if (!eval.Fits(mpdus, base, 0))
        {
            break;
        }
        // Promotions past the first symbol boundary can lower throughput when the
        // channel is lossy, so every feasible promotion count is scored.
        const int kMax = eval.MaxPromotions(mpdus, base);
        for (int k = 0; k <= kMax; ++k)
        {
            if (k == mpdus)
            {
                break; // same as base + 1 with no promotions
            }
            Candidate c{eval.Throughput(mpdus, base, k), mpdus, mpdus * base + k};
            if (!best || Better(c, best->score))
            {
                best = BalancedChoice{c, base, k};
            }
        }
    }
    return best;
}

std::optional<ThroughputReport>
BestForMpdus(const CycleModel& model, const BalancedEvaluator& eval, int mpdus)
{
    auto choice = BestBalanced(eval, mpdus);
    if (!choice)
    {
        return std::nullopt;
    }
    return model.Evaluate(
        AmpduPlan::Balanced(mpdus, choice->base, choice->promoted, model.Spec().msduLen));
}

void
RequireXMax(int xMax)
{
    if (xMax < 1)
    {
        throw std::invalid_argument("optimizer: xMax must be at least 1");
    }
}

} // namespace

int
MaxMsdusPerMpdu(const CycleModel& model)
{
    const auto& tc = model.Timing();
    const int len = model.Spec().msduLen;
    int y = 0;
    while (MpduBytes(y + 1, len, tc) <= tc.maxMpduBytes &&
           model.Fits(MpduLenBits(y + 1, len, tc)))
    {
        ++y;
    }
    return y;
}

std::optional<ThroughputReport>
BestPlanForMpdus(const CycleModel& model, int mpdus)
{
    const int yMax = MaxMsdusPerMpdu(model);
    if (yMax == 0 || mpdus < 1 || mpdus > model.MaxMpdus())
    {
        return std::nullopt;
    }
    BalancedEvaluator eval(model, yMax);
    return BestForMpdus(model, eval, mpdus);
}

ThroughputReport
BestPlan(const ScenarioSpec& spec, const PhyCatalog& catalog, const TimingConstants& tc, int xMax)
{
    RequireXMax(xMax);
    CycleModel model(spec, catalog, tc);
    const int yMax = MaxMsdusPerMpdu(model);
    if (yMax == 0)
    {
        throw NoFeasiblePlan("no single-MSDU MPDU fits the PPDU limit for " +
                             spec.flavor.Label() + " MCS" + std::to_string(spec.mcs));
    }
    BalancedEvaluator eval(model, yMax);
    std::optional<BalancedChoice> best;
    const int xLimit = std::min(xMax, model.MaxMpdus());
    for (int x = 1; x <= xLimit; ++x)
    {
        auto choice = BestBalanced(eval, x);
        if (!choice)
        {
            break; // more MPDUs only add bits
        }
        if (!best || Better(choice->score, best->score))
        {
            best = choice;
        }
    }
    return model.Evaluate(
        AmpduPlan::Balanced(best->score.mpdus, best->base, best->promoted, spec.msduLen));
}

ThroughputReport
BestPlan(const ScenarioSpec& spec, const PhyCatalog& catalog, const TimingConstants& tc)
{
    return BestPlan(spec, catalog, tc, MaxMpdus(spec.ackWindow));
}

std::vector<std::optional<ThroughputReport>>
ThroughputCurve(const ScenarioSpec& spec, const PhyCatalog& catalog, const TimingConstants& tc, int xMax)
{
    RequireXMax(xMax);
    CycleModel model(spec, catalog, tc);
    std::vector<std::optional<ThroughputReport>> curve(static_cast<std::size_t>(xMax));
    const int yMax = MaxMsdusPerMpdu(model);
    if (yMax == 0)
    {
        return curve;
    }
    BalancedEvaluator eval(model, yMax);
    for (int x = 1; x <= std::min(xMax, model.MaxMpdus()); ++x)
    {
        curve[x - 1] = BestForMpdus(model, eval, x);
    }
    return curve;
}

ThroughputReport
BruteForcePlan(const ScenarioSpec& spec,
               const PhyCatalog& catalog,
               const TimingConstants& tc,
               int xCap,
               int yCap)
{
    if (xCap < 1 || xCap > 6 || yCap < 1 || yCap > 6)
    {
        throw std::invalid_argument("brute force: caps must lie in 1..6");
    }
    CycleModel model(spec, catalog, tc);
    std::optional<ThroughputReport> best;
    auto better = [](const ThroughputReport& a, const ThroughputReport& b) {
        if (a.throughputMbps != b.throughputMbps)
        {
            return a.throughputMbps > b.throughputMbps;
        }
        if (a.plan.MpduCount() != b.plan.MpduCount())
        {
            return a.plan.MpduCount() < b.plan.MpduCount();
        }
        return a.plan.TotalMsdus() < b.plan.TotalMsdus();
    };

    for (int x = 1; x <= xCap; ++x)
    {
        std::vector<int> ys(static_cast<std::size_t>(x), 1);
        while (true)
        {
            const bool sizeOk = std::all_of(ys.begin(), ys.end(), [&](int y) {
                return MpduBytes(y, spec.msduLen, tc) <= tc.maxMpduBytes;
            });
            AmpduPlan plan{ys, spec.msduLen};
            if (sizeOk && model.Fits(PsduBits(plan, tc)))
            {
                auto r = model.Evaluate(plan);
                if (!best || better(r, *best))
                {
                    best = std::move(r);
                }
            }
            // odometer increment over [1..yCap]^x
            std::size_t i = 0;
            while (i < ys.size() && ys[i] == yCap)
            {
                ys[i++] = 1;
            }
            if (i == ys.size())
            {
                break;
            }
            ++ys[i];
        }
    }
    if (!best)
    {
        throw NoFeasiblePlan("brute force: no allocation fits the PPDU limit");
    }
    return *best;
}

const McsOutcome*
McsSweep::ForMcs(int mcs) const
{
    for (const auto& o : byMcs)
    {
        if (o.mcs == mcs)
        {
            return &o;
        }
    }
    return nullptr;
}

McsSweep
SweepMcs(const ScenarioSpec& tmpl,
         const PhyCatalog& catalog,
         const TimingConstants& tc,
         std::optional<int> xMax,
         int jobs)
{
    const auto mcsList = ApplicableMcs(tmpl.flavor.GetStandard(),
                                       tmpl.flavor.GetCatalogFlavor(),
                                       tmpl.Concurrent());
    McsSweep sweep;
    sweep.byMcs.resize(mcsList.size());
    ParallelFor(mcsList.size(), jobs, [&](std::size_t i) {
        ScenarioSpec spec = tmpl;
        spec.mcs = mcsList[i];
        auto& out = sweep.byMcs[i];
        out.mcs = spec.mcs;
        try
        {
            out.report = BestPlan(spec, catalog, tc, xMax.value_or(MaxMpdus(spec.ackWindow)));
        }
        catch (const NotApplicable& e)
        {
            out.skipReason = e.what();
        }
        catch (const NoFeasiblePlan& e)
        {
            out.skipReason = e.what();
        }
    });
    for (std::size_t i = 0; i < sweep.byMcs.size(); ++i)
    {
        const auto& r = sweep.byMcs[i].report;
        if (r && (!sweep.best ||
                  r->throughputMbps > sweep.byMcs[*sweep.best].report->throughputMbps))
        {
            sweep.best = i;
        }
    }
    return sweep;
}

std::vector<Flavor>
StrategiesFor(Standard standard, int totalStations)
{
    if (!IsStationCount(totalStations))
    {
        throw InvalidScenario("strategies: station count must be one of 1,4,8,16,32,64");
    }
    if (standard == Standard::Ac)
    {
        return {Flavor::AcSuSingle()};
    }
    if (totalStations == 1)
    {
        return {Flavor::AxSuSingle()};
    }
    std::vector<Flavor> out{Flavor::AxSuTriggered()};
    for (int n : {4, 8, 16, 32, 64})
    {
        if (n <= totalStations && totalStations % n == 0)
        {
            out.push_back(Flavor::AxMu(n));
        }
    }
    return out;
}

std::vector<FlavorOutcome>
SweepFlavors(int totalStations,
             Standard standard,
             double ber,
             int msduLen,
             AckWindow window,
             const PhyCatalog& catalog,
             const TimingConstants& tc,
             int jobs,
             AckSizing sizing)
{
    std::vector<FlavorOutcome> out;
    for (const auto& flavor : StrategiesFor(standard, totalStations))
    {
        FlavorOutcome o;
        o.spec = ScenarioSpec{flavor, totalStations, 0, ber, window, msduLen, sizing};
        if (standard == Standard::Ac)
        {
            o.spec.ackWindow = AckWindow::W64;
            if (totalStations > 1)
            {
                o.status = FlavorOutcome::Status::OutOfScope;
                o.note = "unsupported: contention model out of scope";
                out.push_back(std::move(o));
                continue;
            }
        }
        o.sweep = SweepMcs(o.spec, catalog, tc, std::nullopt, jobs);
        if (const auto* b = o.sweep.Best())
        {
            o.spec.mcs = b->mcs;
        }
        else
        {
            o.status = FlavorOutcome::Status::NoResult;
            o.note = "no applicable MCS produced a feasible plan";
        }
        out.push_back(std::move(o));
    }
    return out;
}

void
ParallelFor(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn)
{
    if (jobs <= 1 || count <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
        {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failureMutex;
    {
        std::vector<std::jthread> workers;
        const auto n = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
        for (std::size_t w = 0; w < n; ++w)
        {
            workers.emplace_back([&] {
                for (auto i = next++; i < count; i = next++)
                {
                    try
                    {
                        fn(i);
                    }
                    catch (...)
                    {
                        std::lock_guard lock(failureMutex);
                        if (!failure)
                        {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
    }
    if (failure)
    {
        std::rethrow_exception(failure);
    }
}

} // namespace wlanul
