#pragma once

#include "wlanul/frame_timing.hpp"
#include "wlanul/phy_catalog.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace wlanul
{

enum class AckWindow
{
    W64,
    W256,
};

constexpr int
MaxMpdus(AckWindow w)
{
    return w == AckWindow::W64 ? 64 : 256;
}

std::string_view ToString(AckWindow w);

/**
 * How acknowledgment frames grow with the 256-MPDU window.
 *
 *  - Compact: BAck uses the 54-byte 256-MPDU bitmap only when X > 64; the
 *    Multi-Station BAck always carries 12 bytes per station.
 *  - PerPlan: both frames switch to their 256-MPDU size only when X > 64.
 *  - Window: both frames use their 256-MPDU size whenever the window is 256.
 */
enum class AckSizing
{
    Compact,
    PerPlan,
    Window,
};

std::string_view ToString(AckSizing a);
std::optional<AckSizing> ParseAckSizing(std::string_view text);

/**
 * UL service pattern of one cycle.
 *
 *  - AcSuSingle / AxSuSingle: a lone station contends and sends; the AP answers with BAck.
 *  - AxSuTriggered: the AP triggers one station at a time (repeated S times).
 *  - AxMu(n): the AP triggers a group of n stations that send simultaneously.
 */
struct Flavor
{
    enum class Kind
    {
        AcSuSingle,
        AxSuSingle,
        AxSuTriggered,
        AxMu,
    };

    Kind kind{Kind::AxSuSingle};
    int concurrent{1};

    static Flavor AcSuSingle()
    {
        return {Kind::AcSuSingle, 1};
    }

    static Flavor AxSuSingle()
    {
        return {Kind::AxSuSingle, 1};
    }

    static Flavor AxSuTriggered()
    {
        return {Kind::AxSuTriggered, 1};
    }

    static Flavor AxMu(int n)
    {
        return {Kind::AxMu, n};
    }

    Standard GetStandard() const
    {
        return kind == Kind::AcSuSingle ? Standard::Ac : Standard::Ax;
    }

    CatalogFlavor GetCatalogFlavor() const;

    /// "SU_AC", "SU_AX", "SU_AX(1)", "MU_AX(4)", ...
    std::string Label() const;

    bool operator==(const Flavor&) const = default;
};

/// Scenario is structurally invalid (bad station counts, BER, window...).
class InvalidScenario : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Plan's PPDU exceeds the time limit.
class IllegalPlan : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct ScenarioSpec
{
    Flavor flavor;
    int totalStations{1};
    int mcs{0};
    double ber{0.0};
    AckWindow ackWindow{AckWindow::W64};
    int msduLen{1500};
    AckSizing ackSizing{AckSizing::Compact};

    int Concurrent() const
    {
        return flavor.concurrent;
    }

    /// Number of back-to-back cycles needed to serve every station once.
    int Cycles() const
    {
        return totalStations / flavor.concurrent;
    }

    /// Throws InvalidScenario.
    void Validate() const;
};

/// Per-term airtime of one cycle.
struct CycleBreakdown
{
    Duration aifs{};
    Duration backoff{};
    Duration dlPreambles{};
    Duration tTf{};
    Duration sifsTotal{};
    Duration ulPreamble{};
    Duration tData{};
    Duration pe{};
    Duration tAck{};

    Duration Total() const
    {
        return aifs + backoff + dlPreambles + tTf + sifsTotal + ulPreamble + tData + pe + tAck;
    }

    bool operator==(const CycleBreakdown&) const = default;
};

struct ThroughputReport
{
    double throughputMbps{0.0};
    Duration cycle{};
    Duration accessDelay{};
    CycleBreakdown breakdown;
    AmpduPlan plan;
};

/**
 * Everything needed to time one cycle, independent of the A-MPDU contents.
 *
 * Every flavor is an instance of the triggered exchange
 *   AIFS + BO + [P_DL + T(TF) + SIFS] + P_UL + T(DATA) + PE + SIFS + P_DL + T(Ack)
 * where the bracketed trigger part is absent for the lone-station pattern.
 * The 256-window acknowledgment is only sent when the A-MPDU holds more than 64
 * MPDUs; the ack window caps the MPDU count.
 */
struct CycleShape
{
    Duration aifs{};
    Duration backoff{};
    Duration sifs{};
    bool triggered{false};
    int triggerStations{1};
    PhyRate dlRate;
    Duration dlPreamble{};
    Duration dlSymbol{};
    PhyRate ulRate;
    Duration ulPreamble{};
    Duration ulSymbol{};
    Duration pe{};
    /// Acknowledgment for A-MPDUs of up to 64 MPDUs.
    ControlFrame ack = ControlFrame::BAck64();
    /// Acknowledgment for larger A-MPDUs (256-MPDU window).
    ControlFrame wideAck = ControlFrame::BAck256();
    int maxMpdus{64};

    const ControlFrame& AckFor(int mpdus) const
    {
        return mpdus > 64 ? wideAck : ack;
    }
};

/// Triggered exchange for `stations` concurrent senders.
CycleShape TriggeredShape(const McsEntry& entry,
                          const TimingConstants& tc,
                          int stations,
                          Duration ulSymbol,
                          Duration dlSymbol,
                          Duration pe,
                          const ControlFrame& ack,
                          const ControlFrame& wideAck,
                          int maxMpdus);

/// Same exchange with the trigger frame and its SIFS deleted.
CycleShape UntriggeredShape(CycleShape shape);

/// Shape used for `spec` (throws NotApplicable / InvalidScenario).
CycleShape ShapeFor(const ScenarioSpec& spec, const PhyCatalog& catalog, const TimingConstants& tc);

/// Cycle terms for `mpdus` MPDUs totalling `psduBits` (before SERVICE/TAIL).
CycleBreakdown ComposeCycle(const CycleShape& shape,
                            int mpdus,
                            std::int64_t psduBits,
                            const TimingConstants& tc = DefaultTiming());

/// Sum over MPDUs of 8 * Y_i * L * (1 - BER)^C_i.
double ExpectedGoodputBits(const AmpduPlan& plan,
                           double ber,
                           const TimingConstants& tc = DefaultTiming());

/// Success probability of a C-bit MPDU under independent bit errors.
double MpduSuccessProbability(std::int64_t bits, double ber);

CycleBreakdown CycleDuration(const ScenarioSpec& spec,
                             const AmpduPlan& plan,
                             const PhyCatalog& catalog,
                             const TimingConstants& tc = DefaultTiming());

ThroughputReport Throughput(const ScenarioSpec& spec,
                            const AmpduPlan& plan,
                            const PhyCatalog& catalog,
                            const TimingConstants& tc = DefaultTiming());

/**
 * A scenario resolved against the catalog, ready to evaluate many plans.
 */
class CycleModel
{
  public:
    CycleModel(const ScenarioSpec& spec, const PhyCatalog& catalog, const TimingConstants& tc);

    const ScenarioSpec& Spec() const
    {
        return m_spec;
    }

    const CycleShape& Shape() const
    {
        return m_shape;
    }

    const TimingConstants& Timing() const
    {
        return m_tc;
    }

    /// Preamble + data airtime for a PSDU of `psduBits`.
    Duration PpduDuration(std::int64_t psduBits) const;

    bool Fits(std::int64_t psduBits) const
    {
        return PpduDuration(psduBits) <= m_tc.ppduLimit;
    }

    int MaxMpdus() const
    {
        return m_shape.maxMpdus;
    }

    CycleBreakdown Breakdown(int mpdus, std::int64_t psduBits) const
    {
        return ComposeCycle(m_shape, mpdus, psduBits, m_tc);
    }

    /// Aggregate throughput in Mbps for one station's goodput over a cycle.
    double ThroughputMbps(double goodputBits, Duration cycle) const;

    Duration AccessDelay(Duration cycle) const;

    /// Throws IllegalPlan when the PPDU exceeds the limit or the plan holds more
    /// MPDUs than the acknowledgment window.
    ThroughputReport Evaluate(const AmpduPlan& plan) const;

  private:
    ScenarioSpec m_spec;
    TimingConstants m_tc;
    CycleShape m_shape;
};

} // namespace wlanul
