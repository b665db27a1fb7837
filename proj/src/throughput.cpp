#include "wlanul/throughput.hpp"

#include <cmath>
#include <sstream>

namespace wlanul
{

std::string_view
ToString(AckWindow w)
{
    return w == AckWindow::W64 ? "64" : "256";
}

std::string_view
ToString(AckSizing a)
{
    switch (a)
    {
    case AckSizing::Compact:
        return "compact";
    case AckSizing::PerPlan:
        return "per-plan";
    case AckSizing::Window:
        return "window";
    }
    return "?";
}

std::optional<AckSizing>
ParseAckSizing(std::string_view text)
{
    for (auto a : {AckSizing::Compact, AckSizing::PerPlan, AckSizing::Window})
    {
        if (text == ToString(a))
        {
            return a;
        }
    }
    return std::nullopt;
}

CatalogFlavor
Flavor::GetCatalogFlavor() const
{
    switch (kind)
    {
    case Kind::AcSuSingle:
    case Kind::AxSuSingle:
        return CatalogFlavor::SuSingle;
    case Kind::AxSuTriggered:
        return CatalogFlavor::SuTriggered;
    case Kind::AxMu:
        return CatalogFlavor::Mu;
    }
    return CatalogFlavor::SuSingle;
}

std::string
Flavor::Label() const
{
    switch (kind)
    {
    case Kind::AcSuSingle:
        return "SU_AC";
    case Kind::AxSuSingle:
        return "SU_AX";
    case Kind::AxSuTriggered:
        return "SU_AX(1)";
    case Kind::AxMu:
        return "MU_AX(" + std::to_string(concurrent) + ")";
    }
    return "?";
}

void
ScenarioSpec::Validate() const
{
    auto fail = [](const std::string& msg) { throw InvalidScenario("scenario: " + msg); };

    if (!IsStationCount(totalStations))
    {
        fail("total stations must be one of 1,4,8,16,32,64");
    }
    switch (flavor.kind)
    {
    case Flavor::Kind::AcSuSingle:
    case Flavor::Kind::AxSuSingle:
        if (flavor.concurrent != 1 || totalStations != 1)
        {
            fail(flavor.Label() + " describes a single station in the system");
        }
        break;
    case Flavor::Kind::AxSuTriggered:
        if (flavor.concurrent != 1)
        {
            fail("triggered SU serves one station per cycle");
        }
        break;
    case Flavor::Kind::AxMu:
        if (flavor.concurrent < 4 || !IsStationCount(flavor.concurrent))
        {
            fail("MU group size must be one of 4,8,16,32,64");
        }
        break;
    }
    if (totalStations % flavor.concurrent != 0)
    {
        fail("group size must divide the number of stations");
    }
    if (ackWindow == AckWindow::W256 && flavor.GetStandard() == Standard::Ac)
    {
        fail("11ac acknowledges at most 64 MPDUs");
    }
    if (!(ber >= 0.0 && ber < 1.0))
    {
        fail("BER must lie in [0, 1)");
    }
    if (msduLen < 1)
    {
        fail("MSDU length must be positive");
    }
}

CycleShape
TriggeredShape(const McsEntry& entry,
               const TimingConstants& tc,
               int stations,
               Duration ulSymbol,
               Duration dlSymbol,
               Duration pe,
               const ControlFrame& ack,
               const ControlFrame& wideAck,
               int maxMpdus)
{
    CycleShape s;
    s.aifs = tc.aifs;
    s.backoff = tc.MeanBackoff();
    s.sifs = tc.sifs;
    s.triggered = true;
    s.triggerStations = stations;
    s.dlRate = entry.dlRate;
    s.dlPreamble = entry.dlPreamble;
    s.dlSymbol = dlSymbol;
    s.ulRate = entry.ulRate;
    s.ulPreamble = entry.ulPreamble;
    s.ulSymbol = ulSymbol;
    s.pe = pe;
    s.ack = ack;
    s.wideAck = wideAck;
    s.maxMpdus = maxMpdus;
    return s;
}

CycleShape
UntriggeredShape(CycleShape shape)
{
    shape.triggered = false;
    return shape;
}

CycleShape
ShapeFor(const ScenarioSpec& spec, const PhyCatalog& catalog, const TimingConstants& tc)
{
    spec.Validate();
    const auto entry = catalog.Lookup(spec.flavor.GetStandard(),
                                      spec.flavor.GetCatalogFlavor(),
                                      spec.Concurrent(),
                                      spec.mcs);
    const int window = MaxMpdus(spec.ackWindow);
    const bool alwaysWide = spec.ackSizing == AckSizing::Window && window > 64;
    const auto back = alwaysWide ? ControlFrame::BAck256() : ControlFrame::BAck64();
    const auto wideBack = ControlFrame::BAck256();

    switch (spec.flavor.kind)
    {
    case Flavor::Kind::AcSuSingle:
        return UntriggeredShape(
            TriggeredShape(entry, tc, 1, tc.tsymAc, tc.tsymAc, tc.peSu, back, back, window));
    case Flavor::Kind::AxSuSingle:
        return UntriggeredShape(TriggeredShape(
            entry, tc, 1, tc.tsymAxUlSu, tc.tsymAxDl, tc.peSu, back, wideBack, window));
    case Flavor::Kind::AxSuTriggered:
        return TriggeredShape(
            entry, tc, 1, tc.tsymAxUlSu, tc.tsymAxDl, tc.peSu, back, wideBack, window);
    case Flavor::Kind::AxMu: {
        const int n = spec.Concurrent();
        const auto narrow = ControlFrame::MultiStaBAck64(n);
        const auto wide = ControlFrame::MultiStaBAck256(n);
        const auto& small = alwaysWide ? wide : narrow;
        const auto& large = spec.ackSizing == AckSizing::Compact ? narrow : wide;
        return TriggeredShape(
            entry, tc, n, tc.tsymAxUlMu, tc.tsymAxDl, tc.peMu, small, large, window);
    }
    }
    throw InvalidScenario("scenario: unknown flavor");
}

CycleBreakdown
ComposeCycle(const CycleShape& shape, int mpdus, std::int64_t psduBits, const TimingConstants& tc)
{
    CycleBreakdown b;
    b.aifs = shape.aifs;
    b.backoff = shape.backoff;
    b.dlPreambles = shape.dlPreamble;
    b.sifsTotal = shape.sifs;
    if (shape.triggered)
    {
        b.dlPreambles += shape.dlPreamble;
        b.tTf = ControlTxTime(ControlFrame::Trigger(shape.triggerStations),
                              shape.dlRate,
                              shape.dlSymbol,
                              tc);
        b.sifsTotal += shape.sifs;
    }
    b.ulPreamble = shape.ulPreamble;
    b.tData = PsduTxTime(psduBits, shape.ulRate, shape.ulSymbol, tc);
    b.pe = shape.pe;
    b.tAck = ControlTxTime(shape.AckFor(mpdus), shape.dlRate, shape.dlSymbol, tc);
    return b;
}

double
MpduSuccessProbability(std::int64_t bits, double ber)
{
    if (ber == 0.0)
    {
        return 1.0;
    }
    return std::exp(static_cast<double>(bits) * std::log1p(-ber));
}

double
ExpectedGoodputBits(const AmpduPlan& plan, double ber, const TimingConstants& tc)
{
    double total = 0.0;
    for (int y : plan.MsdusPerMpdu())
    {
        const auto c = MpduLenBits(y, plan.MsduLen(), tc);
        total += 8.0 * y * plan.MsduLen() * MpduSuccessProbability(c, ber);
    }
    return total;
}

CycleModel::CycleModel(const ScenarioSpec& spec, const PhyCatalog& catalog, const TimingConstants& tc)
    : m_spec(spec),
      m_tc(tc),
      m_shape(ShapeFor(spec, catalog, tc))
{
}

Duration
CycleModel::PpduDuration(std::int64_t psduBits) const
{
    return m_shape.ulPreamble + PsduTxTime(psduBits, m_shape.ulRate, m_shape.ulSymbol, m_tc);
}

double
CycleModel::ThroughputMbps(double goodputBits, Duration cycle) const
{
    // bits per microsecond == Mbit/s
    return m_spec.Concurrent() * goodputBits / ToMicros(cycle);
}

Duration
CycleModel::AccessDelay(Duration cycle) const
{
    // Lone-station patterns have a single group; otherwise every group takes one cycle.
    return cycle * m_spec.Cycles();
}

ThroughputReport
CycleModel::Evaluate(const AmpduPlan& plan) const
{
    if (plan.MsduLen() != m_spec.msduLen)
    {
        throw std::invalid_argument("plan MSDU length differs from the scenario's");
    }
    if (plan.MpduCount() > m_shape.maxMpdus)
    {
        throw IllegalPlan(std::to_string(plan.MpduCount()) + " MPDUs exceed the " +
                          std::to_string(m_shape.maxMpdus) + "-MPDU acknowledgment window");
    }
    const auto bits = PsduBits(plan, m_tc);
    const auto ppdu = PpduDuration(bits);
    if (ppdu > m_tc.ppduLimit)
    {
        throw IllegalPlan("PPDU of " + FormatMicros(ppdu) + " us exceeds the " +
                          FormatMicros(m_tc.ppduLimit) + " us limit");
    }
    ThroughputReport r{0.0, {}, {}, Breakdown(plan.MpduCount(), bits), plan};
    r.cycle = r.breakdown.Total();
    r.throughputMbps = ThroughputMbps(ExpectedGoodputBits(plan, m_spec.ber, m_tc), r.cycle);
    r.accessDelay = AccessDelay(r.cycle);
    return r;
}

CycleBreakdown
CycleDuration(const ScenarioSpec& spec,
              const AmpduPlan& plan,
              const PhyCatalog& catalog,
              const TimingConstants& tc)
{
    return CycleModel(spec, catalog, tc).Evaluate(plan).breakdown;
}

ThroughputReport
Throughput(const ScenarioSpec& spec,
           const AmpduPlan& plan,
           const PhyCatalog& catalog,
           const TimingConstants& tc)
{
    return CycleModel(spec, catalog, tc).Evaluate(plan);
}

} // namespace wlanul
