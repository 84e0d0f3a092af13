#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "coexsim/channel.hpp"
#include "coexsim/lte_mac.hpp"
#include "coexsim/metrics.hpp"
#include "coexsim/phy_link.hpp"
#include "coexsim/rng.hpp"
#include "coexsim/scenario.hpp"
#include "coexsim/time.hpp"
#include "coexsim/topology.hpp"
#include "coexsim/traffic.hpp"
#include "coexsim/wifi_mac.hpp"

namespace coexsim {

// Same-instant events run in this order, so LTE gating is visible to WiFi CCA
// at the slot that shares its timestamp.
enum class EventKind : int {
  DutyEdge = 0,
  TtiBoundary = 1,
  TxEnd = 2,
  Arrival = 3,
  SlotBoundary = 4,
  Beacon = 5,
};

struct Event {
  SimTime t;
  EventKind kind = EventKind::SlotBoundary;
  int subject = -1;  // node or cell id
  std::uint64_t seq = 0;
  std::uint64_t ref = 0;  // transmission id for TxEnd

  // Ordering for a min-heap on (t, kind, seq).
  friend bool operator>(const Event& a, const Event& b) {
    if (a.t != b.t) return a.t > b.t;
    if (a.kind != b.kind) return static_cast<int>(a.kind) > static_cast<int>(b.kind);
    return a.seq > b.seq;
  }
};

enum class TxKind { LteDownlink, LteUplink, WifiData, WifiBeacon };

struct TraceEntry {
  Transmission tx;
  TxKind kind = TxKind::WifiData;
  double delivered_bits = 0.0;
};

// Received power at a node from everything currently on air, split into the
// WiFi-decodable part and the total including thermal noise.
struct PowerSnapshot {
  double wifi_dbm = -std::numeric_limits<double>::infinity();
  double total_dbm = -std::numeric_limits<double>::infinity();
};

inline PowerSnapshot snapshot_active(int rx, std::span<const Transmission> active, const GainMatrix& gm,
                                     const PropagationConfig& cfg) {
  double wifi = 0.0;
  double total = cfg.noise_power_mw();
  for (const auto& t : active) {
    if (t.tx_id == rx) continue;
    const double p = gm(t.tx_id, rx) * dbm_to_mw(t.tx_power_dbm);
    total += p;
    if (t.tech == Tech::Wifi) wifi += p;
  }
  return {mw_to_dbm(wifi), mw_to_dbm(total)};
}

class Simulator {
 public:
  Simulator(const Scenario& scenario, std::uint64_t seed)
      : sc_(checked(scenario)),
        seed_(seed),
        dep_(build_deployment(scenario.deployment, seed,
                              NodePowers{scenario.wifi.tx_power_dbm, scenario.wifi.tx_power_dbm,
                                         scenario.lte.dl_power_dbm, scenario.lte.ue_max_power_dbm})),
        gm_(build_gain_matrix(dep_, scenario.propagation, seed)),
        horizon_(SimTime::from_seconds(scenario.horizon_s)) {
    setup();
  }

  // Optional sink receiving every finished transmission.
  void set_trace(std::vector<TraceEntry>* trace) { trace_ = trace; }

  const Deployment& deployment() const { return dep_; }
  const GainMatrix& gains() const { return gm_; }
  const std::vector<StaState>& stations() const { return stas_; }

  RunMetrics run() {
    if (ran_) throw std::logic_error("Simulator::run called twice");
    ran_ = true;
    if (horizon_ > SimTime{}) {
      schedule_initial();
      while (!calendar_.empty()) {
        const Event ev = calendar_.top();
        if (ev.t >= horizon_) break;
        calendar_.pop();
        now_ = ev.t;
        dispatch(ev);
      }
      now_ = horizon_;
      // Transmissions still on air are credited up to the horizon.
      while (!active_.empty()) {
        Active a = std::move(active_.front());
        active_.erase(active_.begin());
        if (a.kind != TxKind::WifiBeacon) finalize(a, horizon_);
      }
    }
    close_metrics();
    return std::move(metrics_);
  }

 private:
  struct Active {
    Transmission tx;
    TxKind kind = TxKind::WifiData;
    int cell = 0;
    std::size_t ue_index = 0;
    std::int64_t planned_payload = 0;
    std::vector<Transmission> overlaps;
  };

  struct CellRuntime {
    LteCellState lte;
    std::vector<int> sta_indices;
    Contention ap;
    Rng ap_rng;
    bool beacon_pending = false;
    SimTime beacon_deadline;
    SimTime ap_last_eval = SimTime::from_ns(-1);
    bool lte_on = false;
  };

  struct ArrivalCursor {
    std::vector<Packet> packets;
    std::size_t next = 0;
  };

  static const Scenario& checked(const Scenario& s) {
    validate(s);
    return s;
  }

  void setup() {
    const int n = static_cast<int>(dep_.nodes.size());
    sta_index_.assign(static_cast<std::size_t>(n), -1);
    ue_slot_.assign(static_cast<std::size_t>(n), -1);
    arrivals_.resize(static_cast<std::size_t>(n));
    medium_.assign(static_cast<std::size_t>(n), CcaState::Idle);
    medium_version_.assign(static_cast<std::size_t>(n), 0);

    metrics_.horizon = horizon_.seconds();
    metrics_.n_cells = dep_.num_cells();

    for (int c = 0; c < dep_.num_cells(); ++c) {
      std::vector<int> ues;
      std::vector<double> pl;
      for (int k = 0; k < dep_.n_ue; ++k) {
        const int ue = dep_.ue_of(c, k);
        ues.push_back(ue);
        pl.push_back(gm_.loss_db(ue, dep_.bs_of(c)));
        ue_slot_[static_cast<std::size_t>(ue)] = k;
      }
      CellRuntime cell;
      cell.lte = LteCellState(c, dep_.bs_of(c), std::move(ues), std::move(pl));
      cell.ap_rng = make_rng(seed_, Stream::Backoff, static_cast<std::uint64_t>(dep_.ap_of(c)));
      cell.ap.backoff_slots = draw_backoff(cell.ap_rng, sc_.wifi);
      for (int k = 0; k < dep_.n_sta; ++k) {
        const int id = dep_.sta_of(c, k);
        sta_index_[static_cast<std::size_t>(id)] = static_cast<int>(stas_.size());
        cell.sta_indices.push_back(static_cast<int>(stas_.size()));
        StaState st;
        st.node_id = id;
        Rng rng = make_rng(seed_, Stream::Backoff, static_cast<std::uint64_t>(id));
        st.contention.backoff_slots = draw_backoff(rng, sc_.wifi);
        st.backoff_drawn = st.contention.backoff_slots;
        sta_rng_.push_back(rng);
        const double snr = gm_(id, dep_.ap_of(c)) * dbm_to_mw(sc_.wifi.tx_power_dbm) /
                           sc_.propagation.noise_power_mw();
        double se = std::log2(1.0 + snr);
        if (sc_.phy.max_spectral_efficiency > 0.0) se = std::min(se, sc_.phy.max_spectral_efficiency);
        sta_link_.push_back({id, dep_.ap_of(c), sc_.propagation.bandwidth * se});
        sta_last_eval_.push_back(SimTime::from_ns(-1));
        stas_.push_back(std::move(st));
      }
      cells_.push_back(std::move(cell));
    }

    for (const auto& node : dep_.nodes) {
      NodeStats s;
      s.tech = tech_of(node.role);
      s.role = node.role;
      s.cell_id = node.cell_id;
      metrics_.per_node[node.id] = s;
      Rng rng = make_rng(seed_, Stream::Traffic, static_cast<std::uint64_t>(node.id));
      arrivals_[static_cast<std::size_t>(node.id)].packets =
          generate_arrivals(node, dep_, sc_.traffic, horizon_, rng);
    }
  }

  void push(SimTime t, EventKind kind, int subject = -1, std::uint64_t ref = 0) {
    calendar_.push(Event{t, kind, subject, seq_++, ref});
  }

  void schedule_initial() {
    for (int c = 0; c < dep_.num_cells(); ++c) {
      push(SimTime{}, EventKind::DutyEdge, c);
      // Target beacon times staggered evenly across the interval.
      push(SimTime::from_ns(sc_.wifi.beacon_interval.ns() * c / dep_.num_cells()), EventKind::Beacon, c);
    }
    push(SimTime{}, EventKind::TtiBoundary);
    for (std::size_t id = 0; id < arrivals_.size(); ++id)
      if (!arrivals_[id].packets.empty())
        push(arrivals_[id].packets.front().created_at, EventKind::Arrival, static_cast<int>(id));
  }

  void dispatch(const Event& ev) {
    switch (ev.kind) {
      case EventKind::DutyEdge: on_duty_edge(ev.subject); break;
      case EventKind::TtiBoundary: on_tti(); break;
      case EventKind::TxEnd: on_tx_end(ev.ref); break;
      case EventKind::Arrival: on_arrival(ev.subject); break;
      case EventKind::SlotBoundary: on_slot(ev.t); break;
      case EventKind::Beacon: on_beacon(ev.subject); break;
    }
  }

  // --- LTE -----------------------------------------------------------------

  void on_duty_edge(int c) {
    auto& cell = cells_[static_cast<std::size_t>(c)];
    cell.lte_on = is_lte_on(now_, sc_.duty, c);
    const SimTime on_len = sc_.duty.on_length();
    const SimTime offset = (now_ - sc_.duty.phase(c)) % sc_.duty.period;
    const SimTime next = offset < on_len ? now_ + (on_len - offset) : now_ + (sc_.duty.period - offset);
    push(next, EventKind::DutyEdge, c);
    if (sc_.wifi.quiet_during_lte_on && parked_) {
      parked_ = false;
      wake_slots(now_);
    }
  }

  // Time left before this cell's next quiet period; nullopt when WiFi is not
  // restricted by the LTE schedule.
  std::optional<SimTime> quiet_window(int cell, SimTime t) const {
    if (!sc_.wifi.quiet_during_lte_on) return std::nullopt;
    if (is_lte_on(t, sc_.duty, cell)) return SimTime{};
    const auto next = next_on_start(t, sc_.duty, cell);
    if (!next) return std::nullopt;
    return *next - t;
  }

  void on_tti() {
    for (auto& cell : cells_) {
      // Only whole TTIs inside the on window are used.
      const SimTime rel = now_ - sc_.duty.phase(cell.lte.cell_id);
      if (!cell.lte_on || rel % sc_.duty.period + sc_.lte.tti > sc_.duty.on_length()) continue;
      auto emissions = lte_step(cell.lte, now_, sc_.duty, sc_.lte);
      if (!emissions.empty()) lte_busy_ += std::min(now_ + sc_.lte.tti, horizon_) - now_;
      for (auto& e : emissions) {
        Active a;
        a.tx = e.tx;
        a.kind = e.link == LteLink::Downlink ? TxKind::LteDownlink : TxKind::LteUplink;
        a.cell = cell.lte.cell_id;
        a.ue_index = e.ue_index;
        start(std::move(a));
      }
    }
    push(now_ + sc_.lte.tti, EventKind::TtiBoundary);
  }

  // --- transmissions ---------------------------------------------------------

  void start(Active a) {
    a.tx.id = ++tx_counter_;
    for (auto& x : active_) {
      if (x.tx.overlaps_in_time(a.tx)) {
        x.overlaps.push_back(a.tx);
        a.overlaps.push_back(x.tx);
      }
    }
    push(a.tx.end, EventKind::TxEnd, a.tx.tx_id, a.tx.id);
    active_.push_back(std::move(a));
    active_changed();
  }

  void on_tx_end(std::uint64_t id) {
    auto it = std::find_if(active_.begin(), active_.end(), [id](const Active& a) { return a.tx.id == id; });
    if (it == active_.end()) return;
    Active a = std::move(*it);
    active_.erase(it);
    active_changed();
    if (a.kind == TxKind::WifiBeacon) finish_beacon(a);
    else finalize(a, a.tx.end);
  }

  void record_airtime(const Transmission& tx) {
    const auto k = tech_index(tx.tech);
    metrics_.airtime[k] += tx.duration().seconds() * tx.band_fraction;
    ++metrics_.transmissions[k];
  }

  void finalize(Active& a, SimTime end) {
    a.tx.end = end;
    record_airtime(a.tx);
    const auto samples = link_evaluate(a.tx, a.overlaps, gm_, sc_.propagation, sc_.wifi.ofdm_symbol);
    const auto k = tech_index(a.tx.tech);
    for (const auto& s : samples) {
      metrics_.sinr_db[k].push_back(linear_to_db(s.sinr));
      if (sc_.metrics.sinr_duration_weighted) metrics_.sinr_weight[k].push_back(s.duration.seconds());
    }
    const double cap = sc_.phy.max_spectral_efficiency > 0.0 ? sc_.phy.max_spectral_efficiency
                                                             : std::numeric_limits<double>::infinity();
    const double bits = shannon_bits(samples, sc_.propagation.bandwidth, cap);
    double credited = 0.0;

    switch (a.kind) {
      case TxKind::WifiData: {
        auto& sta = stas_[static_cast<std::size_t>(sta_index_[static_cast<std::size_t>(a.tx.tx_id)])];
        const double overhead = static_cast<double>(sc_.wifi.service_bits + sc_.wifi.tail_bits);
        const double ppdu = static_cast<double>(a.planned_payload) + overhead;
        credited = std::max(0.0, std::min(bits, ppdu) - overhead);
        if (!sta.queue.empty()) {
          Packet& head = sta.queue.front();
          credited = std::min(credited, head.remaining_bits());
          head.credit_bits += credited;
          head.airtime += a.tx.duration();
          if (head.complete()) {
            complete(head, end + sc_.wifi.ack_wait);
            sta.queue.pop_front();
          }
        }
        sta.transmitting = false;
        sta.ready_at = end + sc_.wifi.ack_wait;
        sta.contention.idle_run = 0;
        if (end < horizon_) wake_slots(sta.ready_at);
        break;
      }
      case TxKind::LteDownlink:
      case TxKind::LteUplink: {
        auto& lte = cells_[static_cast<std::size_t>(a.cell)].lte;
        auto& q = a.kind == TxKind::LteDownlink ? lte.dl_queue[a.ue_index] : lte.ul_queue[a.ue_index];
        double budget = bits;
        while (!q.empty() && budget > 0.0) {
          Packet& head = q.front();
          const double take = std::min(budget, head.remaining_bits());
          head.credit_bits += take;
          head.airtime += a.tx.duration();
          budget -= take;
          credited += take;
          if (!head.complete()) break;
          complete(head, end);
          q.pop_front();
        }
        break;
      }
      case TxKind::WifiBeacon: break;
    }
    if (trace_) trace_->push_back({a.tx, a.kind, credited});
  }

  void complete(const Packet& p, SimTime done) {
    DeliveryRecord rec;
    rec.packet_id = p.id;
    rec.src = p.src;
    rec.bits = p.size_bits;
    rec.t_tx = p.airtime;
    rec.t_wait = done - p.created_at - p.airtime;
    auto& s = metrics_.per_node[p.src];
    s.completed_bits += p.size_bits;
    ++s.completed_packets;
    s.t_tx += rec.t_tx;
    s.t_wait += rec.t_wait;
    metrics_.deliveries.push_back(rec);
  }

  // --- traffic ---------------------------------------------------------------

  void on_arrival(int node_id) {
    auto& cur = arrivals_[static_cast<std::size_t>(node_id)];
    Packet p = cur.packets[cur.next++];
    if (cur.next < cur.packets.size()) push(cur.packets[cur.next].created_at, EventKind::Arrival, node_id);

    const Node& node = dep_.node(node_id);
    std::deque<Packet>* q = nullptr;
    switch (node.role) {
      case Role::WifiSta: q = &stas_[static_cast<std::size_t>(sta_index_[static_cast<std::size_t>(node_id)])].queue; break;
      case Role::LteUe: q = &cells_[static_cast<std::size_t>(node.cell_id)].lte.ul_queue[static_cast<std::size_t>(ue_slot_[static_cast<std::size_t>(node_id)])]; break;
      case Role::LteBs: q = &cells_[static_cast<std::size_t>(node.cell_id)].lte.dl_queue[static_cast<std::size_t>(ue_slot_[static_cast<std::size_t>(p.dst)])]; break;
      case Role::WifiAp: return;
    }
    auto& s = metrics_.per_node[node_id];
    if (sc_.traffic.max_queue > 0 && q->size() >= sc_.traffic.max_queue) {
      ++s.dropped_packets;
      return;
    }
    s.offered_bits += p.size_bits;
    q->push_back(p);
    if (node.role == Role::WifiSta) wake_slots(now_);
  }

  // --- WiFi ------------------------------------------------------------------

  void on_beacon(int c) {
    auto& cell = cells_[static_cast<std::size_t>(c)];
    if (cell.beacon_pending) drop_beacon(cell);
    cell.beacon_pending = true;
    cell.beacon_deadline = now_ + SimTime::from_ns(sc_.wifi.beacon_interval.ns() / 2);
    push(now_ + sc_.wifi.beacon_interval, EventKind::Beacon, c);
    wake_slots(now_);
  }

  void drop_beacon(CellRuntime& cell) {
    cell.beacon_pending = false;
    ++metrics_.beacons_dropped;
    for (int si : cell.sta_indices) process_beacon(stas_[static_cast<std::size_t>(si)], 0.0, sc_.wifi);
  }

  void finish_beacon(Active& a) {
    record_airtime(a.tx);
    ++metrics_.beacons_sent;
    auto& cell = cells_[static_cast<std::size_t>(a.cell)];
    for (int si : cell.sta_indices) {
      auto& sta = stas_[static_cast<std::size_t>(si)];
      Transmission to_sta = a.tx;
      to_sta.rx_id = sta.node_id;
      const auto samples = link_evaluate(to_sta, a.overlaps, gm_, sc_.propagation, sc_.wifi.ofdm_symbol);
      double worst = samples.empty() ? 0.0 : std::numeric_limits<double>::infinity();
      for (const auto& s : samples) worst = std::min(worst, s.sinr);
      const bool was = sta.associated;
      process_beacon(sta, worst, sc_.wifi);
      if (!was && sta.associated) wake_slots(now_);
    }
    if (trace_) trace_->push_back({a.tx, a.kind, 0.0});
  }

  void active_changed() {
    ++world_version_;
    if (parked_) {
      parked_ = false;
      wake_slots(now_);
    }
  }

  CcaState medium_at(int node) {
    const auto n = static_cast<std::size_t>(node);
    if (medium_version_[n] != world_version_) {
      double wifi = 0.0;
      double total = noise_mw_;
      for (const auto& a : active_) {
        if (a.tx.tx_id == node) continue;
        const double p = gm_(a.tx.tx_id, node) * dbm_to_mw(a.tx.tx_power_dbm);
        total += p;
        if (a.tx.tech == Tech::Wifi) wifi += p;
      }
      medium_[n] = cca(mw_to_dbm(wifi), mw_to_dbm(total), sc_.wifi);
      medium_version_[n] = world_version_;
    }
    return medium_[n];
  }

  // Ensure a slot evaluation at the first slot boundary at or after t (and
  // strictly after the boundary currently being processed).
  void wake_slots(SimTime t) {
    SimTime next = ceil_to_grid(std::max(t, now_), SimTime{}, sc_.wifi.slot);
    if (next <= last_slot_) next = last_slot_ + sc_.wifi.slot;
    if (next >= horizon_) return;
    if (pending_slot_ && *pending_slot_ <= next) return;
    pending_slot_ = next;
    push(next, EventKind::SlotBoundary);
  }

  bool sta_contending(const StaState& s) const {
    return s.associated && !s.transmitting && now_ >= s.ready_at &&
           (!s.queue.empty() || s.contention.backoff_slots > 0);
  }

  void on_slot(SimTime t) {
    if (!pending_slot_ || *pending_slot_ != t) return;  // superseded
    pending_slot_.reset();
    last_slot_ = t;

    const SimTime slot = sc_.wifi.slot;
    bool any_idle = false;
    bool any_contender = false;
    std::vector<Active> starts;

    for (auto& cell : cells_) {
      if (!cell.beacon_pending) continue;
      if (now_ > cell.beacon_deadline) {
        drop_beacon(cell);
        continue;
      }
      any_contender = true;
      const int ap = dep_.ap_of(cell.lte.cell_id);
      if (cell.ap_last_eval + slot != t) cell.ap.idle_run = 0;
      cell.ap_last_eval = t;
      CcaState m = medium_at(ap);
      const auto window = quiet_window(cell.lte.cell_id, t);
      if (window && *window < sc_.wifi.beacon_airtime) m = CcaState::Busy;
      any_idle = any_idle || m == CcaState::Idle;
      if (cell.ap.step(m, true, sc_.wifi)) {
        Active a;
        a.kind = TxKind::WifiBeacon;
        a.cell = cell.lte.cell_id;
        a.tx.tx_id = ap;
        a.tx.rx_id = kBroadcast;
        a.tx.tech = Tech::Wifi;
        a.tx.tx_power_dbm = sc_.wifi.tx_power_dbm;
        a.tx.start = t;
        a.tx.end = t + sc_.wifi.beacon_airtime;
        starts.push_back(std::move(a));
        cell.beacon_pending = false;
        cell.ap.backoff_slots = draw_backoff(cell.ap_rng, sc_.wifi);
        cell.ap.idle_run = 0;
      }
    }

    for (std::size_t i = 0; i < stas_.size(); ++i) {
      auto& sta = stas_[i];
      if (!sta_contending(sta)) continue;
      any_contender = true;
      if (sta_last_eval_[i] + slot != t) sta.contention.idle_run = 0;
      sta_last_eval_[i] = t;
      const int cell = dep_.node(sta.node_id).cell_id;
      CcaState m = medium_at(sta.node_id);
      const auto window = quiet_window(cell, t);
      if (window && payload_fitting(*window, sta_link_[i].est_rate_bps, sc_.wifi) == 0) m = CcaState::Busy;
      any_idle = any_idle || m == CcaState::Idle;
      if (auto plan = wifi_step(sta, t, m, sta_rng_[i], sc_.wifi, sta_link_[i], window)) {
        sta.transmitting = true;
        if (is_lte_on(t, sc_.duty, cell)) ++metrics_.wifi_tx_in_lte_on;
        Active a;
        a.kind = TxKind::WifiData;
        a.cell = cell;
        a.tx = plan->tx;
        a.planned_payload = plan->planned_payload_bits;
        starts.push_back(std::move(a));
      }
    }

    // Decisions above all saw the same medium; starts take effect together.
    for (auto& a : starts) start(std::move(a));

    if (!any_contender) return;
    if (any_idle || !starts.empty()) {
      wake_slots(t + slot);
    } else {
      // Everyone is frozen until the set of transmissions changes.
      parked_ = true;
    }
  }

  void close_metrics() {
    for (auto& [id, s] : metrics_.per_node) s.delivered_bits = s.completed_bits;
    auto add_partial = [&](const std::deque<Packet>& q) {
      for (const auto& p : q)
        if (p.credit_bits > 0.0) metrics_.per_node[p.src].delivered_bits += p.delivered_bits();
    };
    for (const auto& sta : stas_) add_partial(sta.queue);
    for (const auto& cell : cells_) {
      for (const auto& q : cell.lte.ul_queue) add_partial(q);
      for (const auto& q : cell.lte.dl_queue) add_partial(q);
    }
    if (metrics_.horizon > 0.0 && metrics_.n_cells > 0)
      metrics_.duty_observed = lte_busy_.seconds() / (metrics_.horizon * metrics_.n_cells);
  }

  Scenario sc_;
  std::uint64_t seed_;
  Deployment dep_;
  GainMatrix gm_;
  SimTime horizon_;
  SimTime now_;
  double noise_mw_ = sc_.propagation.noise_power_mw();

  std::priority_queue<Event, std::vector<Event>, std::greater<Event>> calendar_;
  std::uint64_t seq_ = 0;
  std::uint64_t tx_counter_ = 0;

  std::vector<CellRuntime> cells_;
  std::vector<StaState> stas_;
  std::vector<Rng> sta_rng_;
  std::vector<WifiLink> sta_link_;
  std::vector<SimTime> sta_last_eval_;
  std::vector<int> sta_index_;
  std::vector<int> ue_slot_;
  std::vector<ArrivalCursor> arrivals_;
  std::vector<Active> active_;

  std::vector<CcaState> medium_;
  std::vector<std::uint64_t> medium_version_;
  std::uint64_t world_version_ = 1;
  std::optional<SimTime> pending_slot_;
  SimTime last_slot_ = SimTime::from_ns(-1);
  bool parked_ = false;

  SimTime lte_busy_;
  RunMetrics metrics_;
  std::vector<TraceEntry>* trace_ = nullptr;
  bool ran_ = false;
};

inline RunMetrics run(const Scenario& scenario, std::uint64_t seed) { return Simulator(scenario, seed).run(); }
inline RunMetrics run(const Scenario& scenario) { return run(scenario, scenario.seed); }

}  // namespace coexsim
