#pragma once

#include "wlanul/units.hpp"

#include <array>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wlanul
{

enum class Standard
{
    Ac,
    Ax,
};

/// Which PHY table a transmission draws its rates from.
enum class CatalogFlavor
{
    SuSingle,
    SuTriggered,
    Mu,
};

std::string_view ToString(Standard s);
std::string_view ToString(CatalogFlavor f);
std::optional<Standard> ParseStandard(std::string_view text);

/// One row of the PHY rate/preamble tables for a 160 MHz, 4 spatial stream setup.
struct McsEntry
{
    Standard standard{Standard::Ax};
    CatalogFlavor flavor{CatalogFlavor::SuSingle};
    int concurrentStations{1};
    int mcs{0};
    PhyRate ulRate;
    Duration ulPreamble{};
    PhyRate dlRate;
    Duration dlPreamble{};

    bool operator==(const McsEntry&) const = default;
};

/**
 * MAC/PHY timing and framing constants (Best Effort access category, 160 MHz).
 */
struct TimingConstants
{
    Duration aifs = Micros(43);
    Duration sifs = Micros(16);
    Duration slot = Micros(9);
    int cwMin = 16;
    Duration tsymAc = Micros(4);
    Duration tsymAxDl = Duration{13600};
    Duration tsymAxUlSu = Duration{13600};
    Duration tsymAxUlMu = Duration{14400};
    Duration peSu = Micros(0);
    Duration peMu = Micros(16);
    Duration ppduLimit = Micros(5484);
    int serviceTailBits = 22;
    int macHeaderBytes = 28;
    int fcsBytes = 4;
    int mpduDelimiterBytes = 4;
    /// Largest MPDU (header + body + FCS) a station may send.
    int maxMpduBytes = 11454;
    /// DL control rates; the tables never use 54 Mbps, even above it.
    std::array<PhyRate, 7> basicRates{
        PhyRate::FromKbps(6000),
        PhyRate::FromKbps(9000),
        PhyRate::FromKbps(12000),
        PhyRate::FromKbps(18000),
        PhyRate::FromKbps(24000),
        PhyRate::FromKbps(36000),
        PhyRate::FromKbps(48000),
    };

    /// Mean backoff: (CWmin - 1) / 2 slots, i.e. 7.5 slots = 67.5 us at 9 us slots.
    Duration MeanBackoff() const
    {
        return slot * (cwMin - 1) / 2;
    }

    /// O_M: MAC header + MPDU delimiter + FCS, in bytes.
    int MpduOverheadBytes() const
    {
        return macHeaderBytes + mpduDelimiterBytes + fcsBytes;
    }
};

const TimingConstants& DefaultTiming();

/// Raised when a (standard, flavor, stations, mcs) key has no table row.
class NotApplicable : public std::runtime_error
{
  public:
    enum class Reason
    {
        McsNotSupported,  ///< e.g. MCS10/11 in 11ac or with 64 MU stations
        UnknownStations,  ///< station count outside {1,4,8,16,32,64} or wrong for flavor
        UnsupportedFlavor, ///< e.g. 11ac trigger-based or MU
        MissingTableRow,  ///< key is in the domain but the table has no row for it
    };

    NotApplicable(Reason reason, const std::string& what)
        : std::runtime_error(what),
          m_reason(reason)
    {
    }

    Reason GetReason() const
    {
        return m_reason;
    }

  private:
    Reason m_reason;
};

/// Parse failure in a catalog override file.
class CatalogFormatError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

bool IsStationCount(int stations);

/**
 * Immutable catalog of PHY rates and preambles.
 *
 * SU rows (one station on the whole channel) serve both SuSingle and SuTriggered
 * lookups; the returned entry carries the flavor that was asked for.
 */
class PhyCatalog
{
  public:
    PhyCatalog() = default;
    explicit PhyCatalog(std::vector<McsEntry> entries);

    /// The embedded tables.
    static const PhyCatalog& Builtin();

    /// Builtin tables with rows replaced/added from a JSON override file.
    static PhyCatalog WithOverrides(const std::filesystem::path& overrideFile);

    /// Returns a copy where each entry in `overrides` replaces the row with the same key.
    PhyCatalog Merged(std::span<const McsEntry> overrides) const;

    PhyCatalog Filtered(const std::function<bool(const McsEntry&)>& keep) const;

    McsEntry Lookup(Standard standard, CatalogFlavor flavor, int stations, int mcs) const;
    std::optional<McsEntry> Find(Standard standard, CatalogFlavor flavor, int stations, int mcs) const;

    std::span<const McsEntry> Entries() const
    {
        return m_entries;
    }

  private:
    std::vector<McsEntry> m_entries;
};

/// Largest basic rate not exceeding `ulRate`, never below the smallest basic rate.
PhyRate SelectDlRate(PhyRate ulRate, const TimingConstants& tc = DefaultTiming());

struct CatalogDiscrepancy
{
    McsEntry entry;
    PhyRate ruleDlRate;
};

/// Reports every row whose DL rate differs from SelectDlRate(ul rate). Table data is
/// left untouched.
std::vector<CatalogDiscrepancy> ValidateCatalog(const PhyCatalog& catalog,
                                                const TimingConstants& tc = DefaultTiming());

/// MCS indices the standard allows for the configuration: 0..9 for 11ac, 0..11 for
/// 11ax except 0..9 with 64 MU stations.
std::vector<int> ApplicableMcs(Standard standard, CatalogFlavor flavor, int stations);

/// Parses the override schema. Exposed for testing.
std::vector<McsEntry> ParseCatalogOverrides(std::string_view jsonText);

namespace detail
{
std::vector<McsEntry> BuiltinRows();
}

} // namespace wlanul
