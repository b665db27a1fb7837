#pragma once

#include "wlanul/phy_catalog.hpp"
#include "wlanul/units.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace wlanul
{

/**
 * A-MPDU structure: X MPDUs, MPDU i carrying Y_i MSDUs of `msduLen` bytes each.
 */
class AmpduPlan
{
  public:
    /// Throws std::invalid_argument on an empty plan, a Y_i < 1 or msduLen < 1.
    AmpduPlan(std::vector<int> msdusPerMpdu, int msduLen);

    static AmpduPlan Uniform(int mpdus, int msdusEach, int msduLen);

    /// `mpdus` MPDUs of `base` MSDUs, the first `promoted` of which carry base + 1.
    static AmpduPlan Balanced(int mpdus, int base, int promoted, int msduLen);

    int MpduCount() const
    {
        return static_cast<int>(m_msdus.size());
    }

    std::span<const int> MsdusPerMpdu() const
    {
        return m_msdus;
    }

    int MsduLen() const
    {
        return m_msduLen;
    }

    int TotalMsdus() const;
    int MinMsdus() const;
    int MaxMsdus() const;

    bool IsBalanced() const
    {
        return MaxMsdus() - MinMsdus() <= 1;
    }

    bool operator==(const AmpduPlan&) const = default;

  private:
    std::vector<int> m_msdus;
    int m_msduLen;
};

/// A-MSDU subframe length: 4 * ceil((L + 14) / 4) bytes.
std::int64_t MsduSubframeLen(int msduLen);

/// C_i: bits of an MPDU holding `msdus` MSDUs, padded to 4 bytes, O_M included.
std::int64_t MpduLenBits(int msdus, int msduLen, const TimingConstants& tc = DefaultTiming());

/// MPDU length in bytes as counted against the maximum MPDU size (header + body + FCS).
std::int64_t MpduBytes(int msdus, int msduLen, const TimingConstants& tc = DefaultTiming());

/// Sum of C_i over the plan.
std::int64_t PsduBits(const AmpduPlan& plan, const TimingConstants& tc = DefaultTiming());

/// Symbol-quantized airtime of a PSDU of `psduBits` plus SERVICE/TAIL bits.
Duration PsduTxTime(std::int64_t psduBits,
                    PhyRate rate,
                    Duration symbol,
                    const TimingConstants& tc = DefaultTiming());

Duration DataTxTime(const AmpduPlan& plan,
                    PhyRate ulRate,
                    Duration ulSymbol,
                    const TimingConstants& tc = DefaultTiming());

/// DL control frames sent at a basic rate with the legacy preamble.
class ControlFrame
{
  public:
    enum class Kind
    {
        BAck64,
        BAck256,
        TriggerFrame,
        MultiStaBAck64,
        MultiStaBAck256,
    };

    static ControlFrame BAck64()
    {
        return ControlFrame{Kind::BAck64, 1};
    }

    static ControlFrame BAck256()
    {
        return ControlFrame{Kind::BAck256, 1};
    }

    static ControlFrame Trigger(int stations);
    static ControlFrame MultiStaBAck64(int stations);
    static ControlFrame MultiStaBAck256(int stations);

    Kind GetKind() const
    {
        return m_kind;
    }

    int Stations() const
    {
        return m_stations;
    }

    /// Frame body in bits. The trigger frame carries 5 bytes per station pair,
    /// i.e. 20 bits per station, so the count stays integral for S = 1.
    std::int64_t Bits() const;

    bool operator==(const ControlFrame&) const = default;

  private:
    ControlFrame(Kind kind, int stations)
        : m_kind(kind),
          m_stations(stations)
    {
    }

    Kind m_kind;
    int m_stations;
};

Duration ControlTxTime(const ControlFrame& frame,
                       PhyRate dlRate,
                       Duration dlSymbol,
                       const TimingConstants& tc = DefaultTiming());

/// Preamble + data airtime. This is the quantity bounded by the PPDU time limit.
Duration PpduDuration(const AmpduPlan& plan,
                      PhyRate ulRate,
                      Duration ulSymbol,
                      Duration preamble,
                      const TimingConstants& tc = DefaultTiming());

inline bool
IsLegalPpdu(Duration ppdu, const TimingConstants& tc = DefaultTiming())
{
    return ppdu <= tc.ppduLimit;
}

} // namespace wlanul
