#include "wlanul/optimizer.hpp"

#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <random>

using namespace wlanul;

namespace
{

const PhyCatalog&
Cat()
{
    return PhyCatalog::Builtin();
}

ScenarioSpec
Spec(Flavor f, int total, int mcs, double ber = 0.0, AckWindow w = AckWindow::W64, int len = 1500)
{
    return ScenarioSpec{f, total, mcs, ber, w, len};
}

std::vector<ScenarioSpec>
SmallSpecs()
{
    std::vector<ScenarioSpec> out;
    for (int len : {64, 512, 1500})
    {
        for (double ber : {0.0, 1e-5, 1e-4})
        {
            for (int mcs : {0, 3, 9})
            {
                out.push_back(Spec(Flavor::AcSuSingle(), 1, mcs, ber, AckWindow::W64, len));
                out.push_back(Spec(Flavor::AxSuSingle(), 1, mcs, ber, AckWindow::W64, len));
                for (int n : {4, 8, 32, 64})
                {
                    out.push_back(Spec(Flavor::AxMu(n), 64, mcs, ber, AckWindow::W64, len));
                }
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("largest MSDU count per MPDU")
{
    const auto& tc = DefaultTiming();
    CHECK(MaxMsdusPerMpdu(CycleModel(Spec(Flavor::AxMu(4), 4, 11), Cat(), tc)) == 7);
    CHECK(MaxMsdusPerMpdu(CycleModel(Spec(Flavor::AxMu(4), 4, 11, 0, AckWindow::W64, 512), Cat(), tc)) ==
          21);
    CHECK(MaxMsdusPerMpdu(CycleModel(Spec(Flavor::AxMu(4), 4, 11, 0, AckWindow::W64, 64), Cat(), tc)) ==
          142);
    // 3.5 Mbps leaves room for a single 1500-byte MSDU.
    CHECK(MaxMsdusPerMpdu(CycleModel(Spec(Flavor::AxMu(64), 64, 0), Cat(), tc)) == 1);
}

TEST_CASE("single MPDU search matches the exhaustive oracle")
{
    const auto& tc = DefaultTiming();
    int compared = 0;
    for (const auto& spec : SmallSpecs())
    {
        const CycleModel model(spec, Cat(), tc);
        const int yMax = MaxMsdusPerMpdu(model);
        if (yMax < 1 || yMax > 6)
        {
            continue;
        }
        const auto a = BestPlan(spec, Cat(), tc, 1);
        const auto b = BruteForcePlan(spec, Cat(), tc, 1, yMax);
        CHECK(a.throughputMbps == b.throughputMbps);
        CHECK(a.plan.MsdusPerMpdu()[0] == b.plan.MsdusPerMpdu()[0]);
        ++compared;
    }
    CHECK(compared >= 10);
}

TEST_CASE("balanced search stays within 1% of the exhaustive oracle")
{
    const auto& tc = DefaultTiming();
    for (const auto& spec : SmallSpecs())
    {
        CAPTURE(spec.flavor.Label());
        CAPTURE(spec.mcs);
        CAPTURE(spec.ber);
        CAPTURE(spec.msduLen);
        const auto oracle = BruteForcePlan(spec, Cat(), tc, 4, 4);
        const auto best = BestPlan(spec, Cat(), tc, 4);
        CHECK(best.throughputMbps >= 0.99 * oracle.throughputMbps);
    }
    const auto spec = Spec(Flavor::AxMu(64), 64, 0);
    CHECK(BestPlan(spec, Cat(), tc, 4).throughputMbps >=
          0.99 * BruteForcePlan(spec, Cat(), tc, 4, 4).throughputMbps);
}

TEST_CASE("throughput depends on the multiset of MSDU counts only")
{
    std::mt19937_64 rng(17);
    const CycleModel model(Spec(Flavor::AxMu(4), 4, 11, 1e-5, AckWindow::W256, 512), Cat(), DefaultTiming());
    for (int i = 0; i < 100; ++i)
    {
        std::vector<int> ys(std::uniform_int_distribution<int>(1, 30)(rng));
        for (auto& y : ys)
        {
            y = std::uniform_int_distribution<int>(1, 6)(rng);
        }
        const auto a = model.Evaluate(AmpduPlan(ys, 512));
        std::shuffle(ys.begin(), ys.end(), rng);
        const auto b = model.Evaluate(AmpduPlan(ys, 512));
        CHECK(a.cycle == b.cycle);
        CHECK(a.throughputMbps == doctest::Approx(b.throughputMbps).epsilon(1e-12));
    }
}

TEST_CASE("optimizer output is balanced and legal")
{
    const auto& tc = DefaultTiming();
    for (int n : {4, 16, 64})
    {
        for (int mcs : {0, 5, 9})
        {
            for (int len : {64, 1500})
            {
                for (auto w : {AckWindow::W64, AckWindow::W256})
                {
                    const auto spec = Spec(Flavor::AxMu(n), 64, mcs, 1e-5, w, len);
                    const auto r = BestPlan(spec, Cat(), tc);
                    CHECK(r.plan.IsBalanced());
                    CHECK(r.plan.MpduCount() <= MaxMpdus(w));
                    CHECK(r.breakdown.ulPreamble + r.breakdown.tData <= tc.ppduLimit);
                    CHECK(MpduBytes(r.plan.MaxMsdus(), len) <= tc.maxMpduBytes);
                    CHECK(r.cycle == r.breakdown.Total());
                }
            }
        }
    }
}

TEST_CASE("wider search never loses")
{
    const auto& tc = DefaultTiming();
    const auto spec = Spec(Flavor::AxMu(4), 4, 11, 1e-5, AckWindow::W256, 512);
    double prev = 0.0;
    for (int xMax : {1, 2, 5, 17, 64, 65, 100, 200, 256})
    {
        const auto r = BestPlan(spec, Cat(), tc, xMax);
        CHECK(r.throughputMbps >= prev);
        prev = r.throughputMbps;
    }

    for (const auto& flavor :
         {Flavor::AxSuSingle(), Flavor::AxSuTriggered(), Flavor::AxMu(4), Flavor::AxMu(64)})
    {
        const int total = flavor.kind == Flavor::Kind::AxSuSingle ? 1 : 64;
        for (double ber : {0.0, 1e-5})
        {
            for (int len : {64, 1500})
            {
                const auto w64 = SweepMcs(Spec(flavor, total, 0, ber, AckWindow::W64, len), Cat());
                const auto w256 = SweepMcs(Spec(flavor, total, 0, ber, AckWindow::W256, len), Cat());
                REQUIRE(w64.byMcs.size() == w256.byMcs.size());
                for (std::size_t i = 0; i < w64.byMcs.size(); ++i)
                {
                    if (w64.byMcs[i].report)
                    {
                        CHECK(w256.byMcs[i].report->throughputMbps >=
                              w64.byMcs[i].report->throughputMbps);
                    }
                }
            }
        }
    }
}

TEST_CASE("optimal working points")
{
    const auto& tc = DefaultTiming();
    for (int len : {64, 512, 1500})
    {
        const auto r = BestPlan(Spec(Flavor::AxMu(4), 4, 11, 0.0, AckWindow::W256, len), Cat(), tc);
        CAPTURE(len);
        CHECK(r.plan.MpduCount() >= 65);
        CHECK(r.plan.MpduCount() <= 80);
    }

    const auto mu4 = BestPlan(Spec(Flavor::AxMu(4), 64, 11, 1e-5, AckWindow::W256), Cat(), tc);
    CHECK((mu4.plan.MpduCount() == 255 || mu4.plan.MpduCount() == 256));
    CHECK(mu4.plan.MaxMsdus() == 1);
    CHECK(ToMicros(mu4.cycle) == doctest::Approx(3110).epsilon(0.05));
}

TEST_CASE("for 8 stations 244 single-MSDU MPDUs beat 242")
{
    const CycleModel model(Spec(Flavor::AxMu(8), 64, 11, 1e-5, AckWindow::W256), Cat(), DefaultTiming());
    const auto a = model.Evaluate(AmpduPlan::Uniform(242, 1, 1500));
    const auto b = model.Evaluate(AmpduPlan::Uniform(244, 1, 1500));
    // 368 vs 371 UL symbols of 14.4 us.
    CHECK(a.breakdown.tData == Duration{368 * 14400});
    CHECK(b.breakdown.tData == Duration{371 * 14400});
    CHECK(b.throughputMbps > a.throughputMbps);
    CHECK_THROWS_AS(model.Evaluate(AmpduPlan::Uniform(248, 1, 1500)), IllegalPlan);
}

TEST_CASE("best MCS per group size")
{
    const auto mu4 = SweepMcs(Spec(Flavor::AxMu(4), 4, 0, 0.0, AckWindow::W256), Cat());
    REQUIRE(mu4.Best());
    CHECK(mu4.Best()->mcs == 11);
    const auto mu64 = SweepMcs(Spec(Flavor::AxMu(64), 64, 0, 0.0, AckWindow::W256), Cat());
    REQUIRE(mu64.Best());
    CHECK(mu64.Best()->mcs == 9);
    CHECK(mu64.byMcs.size() == 10);

    const auto mu16 = SweepMcs(Spec(Flavor::AxMu(16), 16, 0), Cat());
    const auto* missing = mu16.ForMcs(1);
    REQUIRE(missing);
    CHECK_FALSE(missing->report.has_value());
    CHECK_FALSE(missing->skipReason.empty());
}

TEST_CASE("strategy lists")
{
    CHECK(StrategiesFor(Standard::Ax, 1) == std::vector{Flavor::AxSuSingle()});
    CHECK(StrategiesFor(Standard::Ac, 1) == std::vector{Flavor::AcSuSingle()});
    CHECK(StrategiesFor(Standard::Ax, 4) == std::vector{Flavor::AxSuTriggered(), Flavor::AxMu(4)});
    const auto all = StrategiesFor(Standard::Ax, 64);
    REQUIRE(all.size() == 6);
    CHECK(all[0] == Flavor::AxSuTriggered());
    CHECK(all[5] == Flavor::AxMu(64));
}

TEST_CASE("flavor sweep")
{
    const auto single = SweepFlavors(1, Standard::Ax, 0.0, 1500, AckWindow::W256, Cat());
    REQUIRE(single.size() == 1);
    CHECK(single[0].status == FlavorOutcome::Status::Computed);

    const auto ac = SweepFlavors(64, Standard::Ac, 0.0, 1500, AckWindow::W256, Cat());
    REQUIRE(ac.size() == 1);
    CHECK(ac[0].status == FlavorOutcome::Status::OutOfScope);
    CHECK(ac[0].note.find("out of scope") != std::string::npos);
    CHECK(ac[0].Best() == nullptr);

    const auto ax = SweepFlavors(64, Standard::Ax, 1e-5, 1500, AckWindow::W256, Cat());
    REQUIRE(ax.size() == 6);
    auto thr = [&](int i) { return ax[static_cast<std::size_t>(i)].Best()->throughputMbps; };
    CHECK(thr(2) > thr(1));
    CHECK(thr(1) > thr(0));
}

TEST_CASE("no feasible plan")
{
    auto slow = Cat().Lookup(Standard::Ax, CatalogFlavor::Mu, 64, 0);
    slow.ulRate = PhyRate::FromKbps(1000);
    const std::vector<McsEntry> rows{slow};
    const auto cat = Cat().Merged(rows);
    const auto spec = Spec(Flavor::AxMu(64), 64, 0);
    CHECK_THROWS_AS(BestPlan(spec, cat, DefaultTiming()), NoFeasiblePlan);
    const auto sweep = SweepMcs(spec, cat);
    REQUIRE(sweep.ForMcs(0));
    CHECK_FALSE(sweep.ForMcs(0)->report.has_value());
    CHECK(sweep.Best()->mcs == 9);
    const auto curve = ThroughputCurve(spec, cat, DefaultTiming(), 64);
    CHECK(std::none_of(curve.begin(), curve.end(), [](const auto& c) { return c.has_value(); }));
}

TEST_CASE("results do not depend on thread count")
{
    const auto spec = Spec(Flavor::AxMu(8), 64, 0, 1e-5, AckWindow::W256, 512);
    const auto a = SweepMcs(spec, Cat(), DefaultTiming(), std::nullopt, 1);
    const auto b = SweepMcs(spec, Cat(), DefaultTiming(), std::nullopt, 4);
    REQUIRE(a.byMcs.size() == b.byMcs.size());
    CHECK(a.best == b.best);
    for (std::size_t i = 0; i < a.byMcs.size(); ++i)
    {
        REQUIRE(a.byMcs[i].report.has_value() == b.byMcs[i].report.has_value());
        if (a.byMcs[i].report)
        {
            CHECK(a.byMcs[i].report->throughputMbps == b.byMcs[i].report->throughputMbps);
            CHECK(a.byMcs[i].report->plan.MsdusPerMpdu().size() ==
                  b.byMcs[i].report->plan.MsdusPerMpdu().size());
            CHECK(a.byMcs[i].report->plan.TotalMsdus() == b.byMcs[i].report->plan.TotalMsdus());
        }
    }
    const auto c = BestPlan(spec, Cat());
    const auto d = BestPlan(spec, Cat());
    CHECK(c.plan.TotalMsdus() == d.plan.TotalMsdus());
    CHECK(c.plan.MpduCount() == d.plan.MpduCount());
}

TEST_CASE("parallel loop")
{
    std::vector<int> hits(1000, 0);
    ParallelFor(hits.size(), 8, [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));

    std::atomic<int> ran{0};
    CHECK_THROWS_AS(ParallelFor(100,
                                4,
                                [&](std::size_t i) {
                                    ++ran;
                                    if (i == 50)
                                    {
                                        throw std::runtime_error("boom");
                                    }
                                }),
                    std::runtime_error);
}
