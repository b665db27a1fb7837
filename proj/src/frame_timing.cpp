#include "wlanul/frame_timing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wlanul
{

namespace
{

std::int64_t
CeilDiv(std::int64_t num, std::int64_t den)
{
    return (num + den - 1) / den;
}

void
RequireStations(int stations)
{
    if (!IsStationCount(stations))
    {
        throw std::invalid_argument("control frame: station count " + std::to_string(stations) +
                                    " not in {1,4,8,16,32,64}");
    }
}

} // namespace

std::string
FormatMicros(Duration d)
{
    const auto ns = d.count();
    const bool neg = ns < 0;
    const auto abs = neg ? -ns : ns;
    std::string out = (neg ? "-" : "") + std::to_string(abs / 1000);
    auto frac = abs % 1000;
    if (frac != 0)
    {
        std::string digits = std::to_string(frac);
        digits.insert(0, 3 - digits.size(), '0');
        while (digits.back() == '0')
        {
            digits.pop_back();
        }
        out += "." + digits;
    }
    return out;
}

std::int64_t
SymbolsFor(std::int64_t bits, PhyRate rate, Duration symbol)
{
    if (!rate.IsPositive() || symbol.count() <= 0)
    {
        throw std::invalid_argument("symbol count needs a positive rate and symbol duration");
    }
    // bits per symbol = symbol[ns] * rate[kbit/s] / 1e6
    const std::int64_t capacity = symbol.count() * rate.Kbps();
    return CeilDiv(bits * 1'000'000, capacity);
}

AmpduPlan::AmpduPlan(std::vector<int> msdusPerMpdu, int msduLen)
    : m_msdus(std::move(msdusPerMpdu)),
      m_msduLen(msduLen)
{
    if (m_msdus.empty())
    {
        throw std::invalid_argument("A-MPDU plan needs at least one MPDU");
    }
    if (std::any_of(m_msdus.begin(), m_msdus.end(), [](int y) { return y < 1; }))
    {
        throw std::invalid_argument("every MPDU must carry at least one MSDU");
    }
    if (m_msduLen < 1)
    {
        throw std::invalid_argument("MSDU length must be positive");
    }
}

AmpduPlan
AmpduPlan::Uniform(int mpdus, int msdusEach, int msduLen)
{
    return Balanced(mpdus, msdusEach, 0, msduLen);
}

AmpduPlan
AmpduPlan::Balanced(int mpdus, int base, int promoted, int msduLen)
{
    if (mpdus < 1 || promoted < 0 || promoted > mpdus)
    {
        throw std::invalid_argument("balanced plan: bad MPDU/promotion counts");
    }
    std::vector<int> ys(static_cast<std::size_t>(mpdus), base);
    std::fill_n(ys.begin(), promoted, base + 1);
    return AmpduPlan{std::move(ys), msduLen};
}

int
AmpduPlan::TotalMsdus() const
{
    return std::accumulate(m_msdus.begin(), m_msdus.end(), 0);
}

int
AmpduPlan::MinMsdus() const
{
    return *std::min_element(m_msdus.begin(), m_msdus.end());
}

int
AmpduPlan::MaxMsdus() const
{
    return *std::max_element(m_msdus.begin(), m_msdus.end());
}

std::int64_t
MsduSubframeLen(int msduLen)
{
    if (msduLen < 1)
    {
        throw std::invalid_argument("MSDU length must be positive");
    }
    return 4 * CeilDiv(msduLen + 14, 4);
}

std::int64_t
MpduLenBits(int msdus, int msduLen, const TimingConstants& tc)
{
    if (msdus < 1)
    {
        throw std::invalid_argument("an MPDU carries at least one MSDU");
    }
    const std::int64_t bytes = tc.MpduOverheadBytes() + msdus * MsduSubframeLen(msduLen);
    return 8 * 4 * CeilDiv(bytes, 4);
}

std::int64_t
MpduBytes(int msdus, int msduLen, const TimingConstants& tc)
{
    return tc.macHeaderBytes + tc.fcsBytes + msdus * MsduSubframeLen(msduLen);
}

std::int64_t
PsduBits(const AmpduPlan& plan, const TimingConstants& tc)
{
    std::int64_t total = 0;
    for (int y : plan.MsdusPerMpdu())
    {
        total += MpduLenBits(y, plan.MsduLen(), tc);
    }
    return total;
}

Duration
PsduTxTime(std::int64_t psduBits, PhyRate rate, Duration symbol, const TimingConstants& tc)
{
    return symbol * SymbolsFor(psduBits + tc.serviceTailBits, rate, symbol);
}

Duration
DataTxTime(const AmpduPlan& plan, PhyRate ulRate, Duration ulSymbol, const TimingConstants& tc)
{
    return PsduTxTime(PsduBits(plan, tc), ulRate, ulSymbol, tc);
}

ControlFrame
ControlFrame::Trigger(int stations)
{
    RequireStations(stations);
    return ControlFrame{Kind::TriggerFrame, stations};
}

ControlFrame
ControlFrame::MultiStaBAck64(int stations)
{
    RequireStations(stations);
    return ControlFrame{Kind::MultiStaBAck64, stations};
}

ControlFrame
ControlFrame::MultiStaBAck256(int stations)
{
    RequireStations(stations);
    return ControlFrame{Kind::MultiStaBAck256, stations};
}

std::int64_t
ControlFrame::Bits() const
{
    switch (m_kind)
    {
    case Kind::BAck64:
        return 30 * 8;
    case Kind::BAck256:
        return 54 * 8;
    case Kind::TriggerFrame:
        // 28 + (S/2) * 5 bytes
        return 28 * 8 + 20 * static_cast<std::int64_t>(m_stations);
    case Kind::MultiStaBAck64:
        return (22 + 12 * static_cast<std::int64_t>(m_stations)) * 8;
    case Kind::MultiStaBAck256:
        return (22 + 36 * static_cast<std::int64_t>(m_stations)) * 8;
    }
    return 0;
}

Duration
ControlTxTime(const ControlFrame& frame, PhyRate dlRate, Duration dlSymbol, const TimingConstants& tc)
{
    return PsduTxTime(frame.Bits(), dlRate, dlSymbol, tc);
}

Duration
PpduDuration(const AmpduPlan& plan,
             PhyRate ulRate,
             Duration ulSymbol,
             Duration preamble,
             const TimingConstants& tc)
{
    return preamble + DataTxTime(plan, ulRate, ulSymbol, tc);
}

} // namespace wlanul
