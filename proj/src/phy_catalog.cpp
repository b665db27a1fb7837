#include "wlanul/phy_catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace wlanul
{

namespace
{

// SU lookups of either flavor resolve to the single-user table rows.
CatalogFlavor
StorageFlavor(CatalogFlavor f)
{
    return f == CatalogFlavor::Mu ? CatalogFlavor::Mu : CatalogFlavor::SuSingle;
}

bool
SameKey(const McsEntry& e, Standard standard, CatalogFlavor flavor, int stations, int mcs)
{
    return e.standard == standard && StorageFlavor(e.flavor) == StorageFlavor(flavor) &&
           e.concurrentStations == stations && e.mcs == mcs;
}

std::string
KeyString(Standard standard, CatalogFlavor flavor, int stations, int mcs)
{
    std::ostringstream os;
    os << ToString(standard) << "/" << ToString(flavor) << "/" << stations << " stations/MCS"
       << mcs;
    return os.str();
}

} // namespace

std::string_view
ToString(Standard s)
{
    return s == Standard::Ac ? "ac" : "ax";
}

std::string_view
ToString(CatalogFlavor f)
{
    switch (f)
    {
    case CatalogFlavor::SuSingle:
        return "su_single";
    case CatalogFlavor::SuTriggered:
        return "su_triggered";
    case CatalogFlavor::Mu:
        return "mu";
    }
    return "?";
}

std::optional<Standard>
ParseStandard(std::string_view text)
{
    if (text == "ac" || text == "AC" || text == "11ac")
    {
        return Standard::Ac;
    }
    if (text == "ax" || text == "AX" || text == "11ax")
    {
        return Standard::Ax;
    }
    return std::nullopt;
}

const TimingConstants&
DefaultTiming()
{
    static const TimingConstants tc{};
    return tc;
}

bool
IsStationCount(int stations)
{
    switch (stations)
    {
    case 1:
    case 4:
    case 8:
    case 16:
    case 32:
    case 64:
        return true;
    default:
        return false;
    }
}

PhyCatalog::PhyCatalog(std::vector<McsEntry> entries)
    : m_entries(std::move(entries))
{
}

const PhyCatalog&
PhyCatalog::Builtin()
{
    static const PhyCatalog catalog{detail::BuiltinRows()};
    return catalog;
}

PhyCatalog
PhyCatalog::WithOverrides(const std::filesystem::path& overrideFile)
{
    std::ifstream in(overrideFile);
    if (!in)
    {
        throw CatalogFormatError("cannot open catalog override file " + overrideFile.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto rows = ParseCatalogOverrides(buf.str());
    return Builtin().Merged(rows);
}

PhyCatalog
PhyCatalog::Merged(std::span<const McsEntry> overrides) const
{
    std::vector<McsEntry> merged = m_entries;
    for (const auto& o : overrides)
    {
        auto it = std::find_if(merged.begin(), merged.end(), [&](const McsEntry& e) {
            return SameKey(e, o.standard, o.flavor, o.concurrentStations, o.mcs);
        });
        if (it != merged.end())
        {
            *it = o;
        }
        else
        {
            merged.push_back(o);
        }
    }
    return PhyCatalog{std::move(merged)};
}

PhyCatalog
PhyCatalog::Filtered(const std::function<bool(const McsEntry&)>& keep) const
{
    std::vector<McsEntry> kept;
    std::copy_if(m_entries.begin(), m_entries.end(), std::back_inserter(kept), keep);
    return PhyCatalog{std::move(kept)};
}

std::optional<McsEntry>
PhyCatalog::Find(Standard standard, CatalogFlavor flavor, int stations, int mcs) const
{
    auto it = std::find_if(m_entries.begin(), m_entries.end(), [&](const McsEntry& e) {
        return SameKey(e, standard, flavor, stations, mcs);
    });
    if (it == m_entries.end())
    {
        return std::nullopt;
    }
    McsEntry e = *it;
    e.flavor = flavor;
    return e;
}

McsEntry
PhyCatalog::Lookup(Standard standard, CatalogFlavor flavor, int stations, int mcs) const
{
    using Reason = NotApplicable::Reason;
    const auto key = KeyString(standard, flavor, stations, mcs);

    if (standard == Standard::Ac && flavor != CatalogFlavor::SuSingle)
    {
        throw NotApplicable(Reason::UnsupportedFlavor, key + ": 11ac has no triggered/MU uplink");
    }
    if (!IsStationCount(stations) || (flavor == CatalogFlavor::Mu) == (stations == 1))
    {
        throw NotApplicable(Reason::UnknownStations, key + ": station count not in the table");
    }
    const auto mcsList = ApplicableMcs(standard, flavor, stations);
    if (std::find(mcsList.begin(), mcsList.end(), mcs) == mcsList.end())
    {
        throw NotApplicable(Reason::McsNotSupported, key + ": MCS not applicable");
    }
    if (auto e = Find(standard, flavor, stations, mcs))
    {
        return *e;
    }
    throw NotApplicable(Reason::MissingTableRow, key + ": no row in the PHY table");
}

PhyRate
SelectDlRate(PhyRate ulRate, const TimingConstants& tc)
{
    PhyRate chosen = *std::min_element(tc.basicRates.begin(), tc.basicRates.end());
    for (const auto& r : tc.basicRates)
    {
        if (r <= ulRate && r > chosen)
        {
            chosen = r;
        }
    }
    return chosen;
}

std::vector<CatalogDiscrepancy>
ValidateCatalog(const PhyCatalog& catalog, const TimingConstants& tc)
{
    std::vector<CatalogDiscrepancy> out;
    for (const auto& e : catalog.Entries())
    {
        const auto rule = SelectDlRate(e.ulRate, tc);
        if (rule != e.dlRate)
        {
            out.push_back({e, rule});
        }
    }
    return out;
}

std::vector<int>
ApplicableMcs(Standard standard, CatalogFlavor flavor, int stations)
{
    int top = 11;
    if (standard == Standard::Ac || (flavor == CatalogFlavor::Mu && stations == 64))
    {
        top = 9;
    }
    std::vector<int> out;
    for (int m = 0; m <= top; ++m)
    {
        out.push_back(m);
    }
    return out;
}

std::vector<McsEntry>
ParseCatalogOverrides(std::string_view jsonText)
{
    using nlohmann::json;
    json doc;
    try
    {
        doc = json::parse(jsonText);
    }
    catch (const json::parse_error& e)
    {
        throw CatalogFormatError(std::string("catalog override: ") + e.what());
    }
    if (!doc.is_object())
    {
        throw CatalogFormatError("catalog override: top level must be an object");
    }
    for (const auto& [k, v] : doc.items())
    {
        if (k != "entries")
        {
            throw CatalogFormatError("catalog override: unknown key '" + k + "'");
        }
    }
    if (!doc.contains("entries") || !doc["entries"].is_array())
    {
        throw CatalogFormatError("catalog override: 'entries' must be an array");
    }

    static const std::set<std::string> kFields{"standard",
                                               "flavor",
                                               "stations",
                                               "mcs",
                                               "ul_rate_mbps",
                                               "ul_preamble_us",
                                               "dl_rate_mbps",
                                               "dl_preamble_us"};
    std::vector<McsEntry> rows;
    std::size_t index = 0;
    for (const auto& rec : doc["entries"])
    {
        const std::string where = "catalog override: entries[" + std::to_string(index++) + "]";
        if (!rec.is_object())
        {
            throw CatalogFormatError(where + " must be an object");
        }
        for (const auto& [k, v] : rec.items())
        {
            if (!kFields.contains(k))
            {
                throw CatalogFormatError(where + ": unknown key '" + k + "'");
            }
        }
        for (const auto& f : kFields)
        {
            if (!rec.contains(f))
            {
                throw CatalogFormatError(where + ": missing key '" + f + "'");
            }
        }
        auto number = [&](const char* field) {
            const auto& v = rec.at(field);
            if (!v.is_number())
            {
                throw CatalogFormatError(where + ": '" + field + "' must be a number");
            }
            return v.get<double>();
        };
        auto integer = [&](const char* field) {
            const auto& v = rec.at(field);
            if (!v.is_number_integer())
            {
                throw CatalogFormatError(where + ": '" + field + "' must be an integer");
            }
            return v.get<int>();
        };

        McsEntry e;
        const auto& stdField = rec.at("standard");
        auto standard = stdField.is_string() ? ParseStandard(stdField.get<std::string>())
                                             : std::nullopt;
        if (!standard)
        {
            throw CatalogFormatError(where + ": 'standard' must be \"ac\" or \"ax\"");
        }
        e.standard = *standard;
        const auto& fl = rec.at("flavor");
        if (fl == "su")
        {
            e.flavor = CatalogFlavor::SuSingle;
        }
        else if (fl == "mu")
        {
            e.flavor = CatalogFlavor::Mu;
        }
        else
        {
            throw CatalogFormatError(where + ": 'flavor' must be \"su\" or \"mu\"");
        }
        e.concurrentStations = integer("stations");
        e.mcs = integer("mcs");
        if (!IsStationCount(e.concurrentStations) ||
            (e.flavor == CatalogFlavor::Mu) == (e.concurrentStations == 1))
        {
            throw CatalogFormatError(where + ": invalid 'stations' for flavor");
        }
        if (e.mcs < 0 || e.mcs > 11)
        {
            throw CatalogFormatError(where + ": 'mcs' must be in 0..11");
        }
        const double ul = number("ul_rate_mbps");
        const double dl = number("dl_rate_mbps");
        const double ulPre = number("ul_preamble_us");
        const double dlPre = number("dl_preamble_us");
        if (ul <= 0 || dl < 6.0 || ulPre <= 0 || dlPre <= 0)
        {
            throw CatalogFormatError(where + ": rates/preambles out of range");
        }
        e.ulRate = PhyRate::FromMbps(ul);
        e.dlRate = PhyRate::FromMbps(dl);
        e.ulPreamble = MicrosFromDouble(ulPre);
        e.dlPreamble = MicrosFromDouble(dlPre);

        for (const auto& prev : rows)
        {
            if (SameKey(prev, e.standard, e.flavor, e.concurrentStations, e.mcs))
            {
                throw CatalogFormatError(where + ": duplicate key");
            }
        }
        rows.push_back(e);
    }
    return rows;
}

} // namespace wlanul
