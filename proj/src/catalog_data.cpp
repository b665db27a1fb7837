#include "wlanul/phy_catalog.hpp"

namespace wlanul::detail
{

namespace
{

struct Row
{
    Standard standard;
    CatalogFlavor flavor;
    int stations;
    int mcs;
    double ulRateMbps;
    double ulPreambleUs;
    double dlRateMbps;
};

// Columns: standard, flavor, stations, MCS, UL rate (Mbps), UL preamble (us),
// DL control-frame rate (Mbps). Every DL transmission uses the 20 us legacy preamble.
constexpr Row kRows[] = {
    // 11ac, single user, 4 SS, GI 0.8 us; BAck at the basic rate set
    {Standard::Ac, CatalogFlavor::SuSingle, 1,  0,   234.0, 52.0, 48.0},
    {Standard::Ac, CatalogFlavor::SuSingle, 1,  1,   468.0, 52.0, 48.0},
    {Standard::Ac, CatalogFlavor::SuSingle, 1,  2,   702.5, 52.0, 48.0},
    {Standard::Ac, CatalogFlavor::SuSingle, 1,  3,   936.0, 52.0, 48.0},
    {Standard::Ac, CatalogFlavor::SuSingle, 1,  4,  1404.0, 52.0, 48.0},
    {Standard::Ac, CatalogFlavor::SuSingle, 1,  5,  1872.0, 52.0, 48.0},
    {Standard::Ac, CatalogFlavor::SuSingle, 1,  6,  2106.0, 52.0, 48.0},
    {Standard::Ac, CatalogFlavor::SuSingle, 1,  7,  2340.0, 52.0, 48.0},
    {Standard::Ac, CatalogFlavor::SuSingle, 1,  8,  2808.0, 52.0, 48.0},
    {Standard::Ac, CatalogFlavor::SuSingle, 1,  9,  3120.0, 52.0, 48.0},
    // 11ax, single user, 4 SS, GI 0.8 us
    {Standard::Ax, CatalogFlavor::SuSingle, 1,  0,   288.2, 60.8, 48.0},
    {Standard::Ax, CatalogFlavor::SuSingle, 1,  1,   576.5, 60.8, 48.0},
    {Standard::Ax, CatalogFlavor::SuSingle, 1,  2,   864.7, 60.8, 48.0},
    {Standard::Ax, CatalogFlavor::SuSingle, 1,  3,  1152.9, 60.8, 48.0},
    {Standard::Ax, CatalogFlavor::SuSingle, 1,  4,  1729.4, 60.8, 48.0},
    {Standard::Ax, CatalogFlavor::SuSingle, 1,  5,  2305.9, 60.8, 48.0},
    {Standard::Ax, CatalogFlavor::SuSingle, 1,  6,  2594.1, 60.8, 48.0},
    {Standard::Ax, CatalogFlavor::SuSingle, 1,  7,  2882.4, 60.8, 48.0},
    {Standard::Ax, CatalogFlavor::SuSingle, 1,  8,  3458.8, 60.8, 48.0},
    {Standard::Ax, CatalogFlavor::SuSingle, 1,  9,  3848.1, 60.8, 48.0},
    {Standard::Ax, CatalogFlavor::SuSingle, 1, 10,  4323.5, 60.8, 48.0},
    {Standard::Ax, CatalogFlavor::SuSingle, 1, 11,  4803.9, 60.8, 48.0},
    // 11ax, UL MU, 4 stations, 1 SS each, GI 1.6 us; TF/Multi-STA BAck at basic rate set
    {Standard::Ax, CatalogFlavor::Mu, 4,  0,    68.1, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 4,  1,   136.1, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 4,  2,   204.2, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 4,  3,   272.2, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 4,  4,   408.3, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 4,  5,   544.4, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 4,  6,   612.5, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 4,  7,   680.6, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 4,  8,   816.7, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 4,  9,   907.4, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 4, 10,  1020.8, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 4, 11,  1134.2, 64.8, 48.0},
    // 11ax, UL MU, 8 stations, 1 SS each, GI 1.6 us; TF/Multi-STA BAck at basic rate set
    {Standard::Ax, CatalogFlavor::Mu, 8,  0,    34.0, 64.8, 36.0},
    {Standard::Ax, CatalogFlavor::Mu, 8,  1,    68.1, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 8,  2,   102.1, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 8,  3,   136.1, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 8,  4,   204.2, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 8,  5,   272.2, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 8,  6,   306.3, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 8,  7,   340.3, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 8,  8,   408.3, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 8,  9,   453.7, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 8, 10,   510.4, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 8, 11,   567.1, 64.8, 48.0},
    // 11ax, UL MU, 16 stations, 1 SS each, GI 1.6 us; TF/Multi-STA BAck at basic rate set
    // no MCS1 row for 16 stations
    {Standard::Ax, CatalogFlavor::Mu, 16,  0,    16.3, 64.8, 12.0},
    {Standard::Ax, CatalogFlavor::Mu, 16,  2,    48.8, 64.8, 24.0},
    {Standard::Ax, CatalogFlavor::Mu, 16,  3,    65.0, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 16,  4,    97.5, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 16,  5,   130.0, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 16,  6,   146.3, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 16,  7,   162.5, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 16,  8,   195.0, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 16,  9,   216.7, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 16, 10,   243.8, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 16, 11,   270.8, 64.8, 48.0},
    // 11ax, UL MU, 32 stations, 1 SS each, GI 1.6 us; TF/Multi-STA BAck at basic rate set
    {Standard::Ax, CatalogFlavor::Mu, 32,  0,     8.1, 64.8,  6.0},
    {Standard::Ax, CatalogFlavor::Mu, 32,  1,    16.3, 64.8, 12.0},
    {Standard::Ax, CatalogFlavor::Mu, 32,  2,    24.4, 64.8, 24.0},
    {Standard::Ax, CatalogFlavor::Mu, 32,  3,    32.5, 64.8, 24.0},
    {Standard::Ax, CatalogFlavor::Mu, 32,  4,    48.8, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 32,  5,    65.0, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 32,  6,    73.1, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 32,  7,    81.3, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 32,  8,    97.5, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 32,  9,   108.3, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 32, 10,   121.9, 64.8, 48.0},
    {Standard::Ax, CatalogFlavor::Mu, 32, 11,   135.4, 64.8, 48.0},
    // 11ax, UL MU, 64 stations, 1 SS each, GI 1.6 us; TF/Multi-STA BAck at basic rate set
    {Standard::Ax, CatalogFlavor::Mu, 64,  0,     3.5, 64.8,  6.0},
    {Standard::Ax, CatalogFlavor::Mu, 64,  1,     7.1, 64.8,  6.0},
    {Standard::Ax, CatalogFlavor::Mu, 64,  2,    10.6, 64.8,  9.0},
    {Standard::Ax, CatalogFlavor::Mu, 64,  3,    14.2, 64.8, 12.0},
    {Standard::Ax, CatalogFlavor::Mu, 64,  4,    21.3, 64.8, 18.0},
    {Standard::Ax, CatalogFlavor::Mu, 64,  5,    28.3, 64.8, 24.0},
    {Standard::Ax, CatalogFlavor::Mu, 64,  6,    31.9, 64.8, 24.0},
    {Standard::Ax, CatalogFlavor::Mu, 64,  7,    35.4, 64.8, 24.0},
    {Standard::Ax, CatalogFlavor::Mu, 64,  8,    42.5, 64.8, 36.0},
    {Standard::Ax, CatalogFlavor::Mu, 64,  9,    47.2, 64.8, 36.0},
};

constexpr double kLegacyPreambleUs = 20.0;

} // namespace

std::vector<McsEntry>
BuiltinRows()
{
    std::vector<McsEntry> rows;
    rows.reserve(std::size(kRows));
    for (const auto& r : kRows)
    {
        rows.push_back(McsEntry{r.standard,
                                r.flavor,
                                r.stations,
                                r.mcs,
                                PhyRate::FromMbps(r.ulRateMbps),
                                MicrosFromDouble(r.ulPreambleUs),
                                PhyRate::FromMbps(r.dlRateMbps),
                                MicrosFromDouble(kLegacyPreambleUs)});
    }
    return rows;
}

} // namespace wlanul::detail
