#pragma once

#include <chrono>
#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

namespace wlanul
{

/// All airtime is kept in integer nanoseconds so symbol multiples stay exact
/// (13.6 us == 13600 ns).
using Duration = std::chrono::duration<std::int64_t, std::nano>;

constexpr Duration
Micros(std::int64_t us)
{
    return Duration{us * 1000};
}

/// Converts a decimal microsecond value (e.g. 60.8) to nanoseconds, rounding to
/// the nearest nanosecond.
inline Duration
MicrosFromDouble(double us)
{
    return Duration{std::llround(us * 1000.0)};
}

inline double
ToMicros(Duration d)
{
    return static_cast<double>(d.count()) / 1000.0;
}

/// Exact decimal rendering of a duration in microseconds ("234.5", "5529.6").
std::string FormatMicros(Duration d);

/**
 * PHY rate held as an integer number of kbit/s.
 *
 * The table rates carry one decimal in Mbps, so kbit/s keeps them exact and
 * lets symbol counts be computed in integer arithmetic.
 */
class PhyRate
{
  public:
    constexpr PhyRate() = default;

    static constexpr PhyRate FromKbps(std::int64_t kbps)
    {
        PhyRate r;
        r.m_kbps = kbps;
        return r;
    }

    static PhyRate FromMbps(double mbps)
    {
        return FromKbps(std::llround(mbps * 1000.0));
    }

    constexpr std::int64_t Kbps() const
    {
        return m_kbps;
    }

    double Mbps() const
    {
        return static_cast<double>(m_kbps) / 1000.0;
    }

    constexpr bool IsPositive() const
    {
        return m_kbps > 0;
    }

    constexpr auto operator<=>(const PhyRate&) const = default;

  private:
    std::int64_t m_kbps{0};
};

/// Number of whole OFDM symbols needed to carry `bits` at `rate` with symbols of
/// length `symbol`: ceil(bits / (symbol * rate)).
std::int64_t SymbolsFor(std::int64_t bits, PhyRate rate, Duration symbol);

} // namespace wlanul
