#include "rauzy/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace rauzy {

namespace {

// Dense double matrices are all the cocycle accumulation needs.
struct DMat {
  size_t n = 0;
  std::vector<double> a;
  DMat() = default;
  explicit DMat(size_t n_) : n(n_), a(n_ * n_, 0.0) {}
  double& operator()(size_t i, size_t j) { return a[i * n + j]; }
  double operator()(size_t i, size_t j) const { return a[i * n + j]; }
  static DMat identity(size_t n) {
    DMat m(n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  DMat operator*(const DMat& o) const {
    DMat p(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        double x = (*this)(i, k);
        if (x == 0) continue;
        for (size_t j = 0; j < n; ++j) p(i, j) += x * o(k, j);
      }
    return p;
  }
};

DMat to_dmat(const QMat& q) {
  DMat m(q.rows());
  for (size_t i = 0; i < q.rows(); ++i)
    for (size_t j = 0; j < q.cols(); ++j) m(i, j) = rat_to_double(q(i, j));
  return m;
}

// Gram-Schmidt in place; returns the log of each diagonal normalizer.
std::vector<double> qr_accumulate(DMat& f) {
  size_t n = f.n;
  std::vector<double> logs(n, 0.0);
  // Columns of f are the frame vectors.
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = 0; k < j; ++k) {
      double dot = 0;
      for (size_t i = 0; i < n; ++i) dot += f(i, j) * f(i, k);
      for (size_t i = 0; i < n; ++i) f(i, j) -= dot * f(i, k);
    }
    double norm = 0;
    for (size_t i = 0; i < n; ++i) norm += f(i, j) * f(i, j);
    norm = std::sqrt(norm);
    if (norm <= 0) throw internal_error("degenerate frame in QR accumulation");
    logs[j] = std::log(norm);
    for (size_t i = 0; i < n; ++i) f(i, j) /= norm;
  }
  return logs;
}

struct PieceCache {
  RauzyDiagram diagram;
  int base = 0;
  size_t dim = 0;                       // cocycle dimension
  std::vector<std::array<DMat, 2>> edge;  // per (vertex, side)
};

// The quotient cocycle matrix along one reduced-diagram edge, expressed in
// the deterministic bases attached to the canonical representatives.
QMat edge_quotient_matrix(const GP& from_rep, Side s, const GP& to_rep, const IMat& basis_from,
                          const IMat& basis_to, bool abelian) {
  size_t n = basis_from.cols();
  IMat total(0, 0);
  GP next;
  if (abelian) {
    total = elementary_matrix(from_rep, s);
    next = rauzy_move(from_rep, s);
  } else {
    ArcMove am = arc_action(from_rep, s);
    total = am.mat;
    next = am.next;
  }
  std::vector<int> p = to_rep.reindexing_from(next);
  if (p.empty()) throw internal_error("edge target is not the canonical class");
  IMat relabel(n, n);
  if (abelian) {
    for (int a = 0; a < to_rep.size_alphabet(); ++a) relabel(a, p[a]) = 1;
  } else {
    for (int a = 0; a < from_rep.size_alphabet(); ++a)
      for (int j : {0, 1})
        relabel(CoverStructure::arc_id(a, j), CoverStructure::arc_id(p[a], j)) = 1;
  }
  QMat transported = to_qmat(basis_from * total * relabel);
  QMat bt = to_qmat(basis_to).transpose();
  QMat t(basis_from.rows(), basis_to.rows());
  for (size_t i = 0; i < basis_from.rows(); ++i) {
    QVec rhs(bt.rows());
    for (size_t j = 0; j < bt.rows(); ++j) rhs[j] = transported(i, j);
    QVec sol = solve(bt, rhs);
    for (size_t j = 0; j < basis_to.rows(); ++j) t(i, j) = sol[j];
  }
  return t;
}

PieceCache build_piece_cache(const GP& pi, Piece piece, const SectionConfig& cfg) {
  PieceCache pc;
  pc.diagram = build_diagram(pi, true, cfg.diagram_budget);
  pc.base = pc.diagram.vertex_of(pi);
  size_t nv = pc.diagram.size();
  if (piece == Piece::FullRV) {
    pc.dim = pi.size_alphabet();
    pc.edge.resize(nv);
    for (size_t v = 0; v < nv; ++v)
      for (Side s : {Side::Top, Side::Bottom})
        pc.edge[v][s == Side::Top ? 0 : 1] =
            to_dmat(to_qmat(elementary_matrix(pc.diagram.vertices[v], s)));
    return pc;
  }
  bool abelian = piece == Piece::AbelianAbsolute;
  if (abelian && !pi.is_abelian())
    throw domain_error("abelian-absolute piece needs an abelian permutation");
  if (!abelian && pi.is_abelian())
    throw domain_error("plus/minus pieces need a quadratic permutation");
  std::vector<IMat> bases(nv);
  for (size_t v = 0; v < nv; ++v) {
    if (abelian) {
      bases[v] = abelian_homology(pc.diagram.vertices[v]).basis;
    } else {
      IntersectionForm f = intersection_form(pc.diagram.vertices[v]);
      bases[v] = piece == Piece::Plus ? f.plus_basis : f.minus_basis;
    }
  }
  pc.dim = bases.empty() ? 0 : bases[pc.base].rows();
  pc.edge.resize(nv);
  for (size_t v = 0; v < nv; ++v)
    for (Side s : {Side::Top, Side::Bottom}) {
      int w = pc.diagram.target(static_cast<int>(v), s);
      pc.edge[v][s == Side::Top ? 0 : 1] = to_dmat(edge_quotient_matrix(
          pc.diagram.vertices[v], s, pc.diagram.vertices[w], bases[v], bases[w], abelian));
    }
  return pc;
}

// Exact width state on the canonical representative of a reduced vertex.
struct WidthState {
  int vertex;
  QVec x;  // indexed by the canonical representative's letters
};

class Simulator {
 public:
  Simulator(const RauzyDiagram& d, int base, const SectionConfig& cfg, uint64_t seed)
      : d_(d), base_(base), cfg_(cfg), rng_(seed) {
    reset();
  }

  size_t tie_incidents = 0;

  // Runs one move and returns the side taken; on a width tie the chain is
  // restarted from a fresh random point and nullopt is returned (the caller
  // discards its partial excursion).
  std::optional<Side> step() {
    const GP& rep = d_.vertices[st_.vertex];
    int wt = rep.last_top(), wb = rep.last_bottom();
    if (st_.x[wt] == st_.x[wb]) {
      ++tie_incidents;
      reset();
      return std::nullopt;
    }
    Side s = st_.x[wt] > st_.x[wb] ? Side::Top : Side::Bottom;
    int w = s == Side::Top ? wt : wb, l = s == Side::Top ? wb : wt;
    st_.x[w] -= st_.x[l];
    GP next = rauzy_move(rep, s);
    int tv = d_.target(st_.vertex, s);
    std::vector<int> p = d_.vertices[tv].reindexing_from(next);
    if (p.empty()) throw internal_error("simulator left the diagram");
    QVec nx(st_.x.size());
    for (size_t a = 0; a < st_.x.size(); ++a) nx[p[a]] = st_.x[a];
    st_.x = std::move(nx);
    st_.vertex = tv;
    return s;
  }

  int vertex() const { return st_.vertex; }

  // L1-normalizes x and returns the previous norm.
  Rat normalize() {
    Rat n(0);
    for (const Rat& v : st_.x) n += v;
    for (Rat& v : st_.x) v /= n;
    round_if_needed();
    return n;
  }

 private:
  void reset() {
    const GP& rep = d_.vertices[base_];
    std::uniform_int_distribution<long> dist(1, 1 << 20);
    int dd = rep.size_alphabet();
    QVec x(dd);
    for (int a = 0; a < dd; ++a) x[a] = Rat(dist(rng_), 1 << 10);
    if (rep.is_quadratic()) {
      Rat tf(0), bf(0);
      for (int a = 0; a < dd; ++a) {
        if (rep.letter_type(a) == LetterType::TopFlip) tf += x[a];
        if (rep.letter_type(a) == LetterType::BottomFlip) bf += x[a];
      }
      Rat mu = bf / tf;
      for (int a = 0; a < dd; ++a)
        if (rep.letter_type(a) == LetterType::TopFlip) x[a] *= mu;
    }
    st_ = {base_, std::move(x)};
  }

  void round_if_needed() {
    size_t bits = 0;
    for (const Rat& v : st_.x) bits = std::max(bits, rat_bits(v));
    if (bits <= cfg_.bit_budget) return;
    const GP& rep = d_.vertices[st_.vertex];
    Int max_den = Int(1) << 62;
    for (Rat& v : st_.x) v = round_rat(v, max_den);
    for (Rat& v : st_.x)
      if (v <= 0) v = Rat(1, 1L << 40);
    if (rep.is_quadratic()) {
      Rat tf(0), bf(0);
      for (size_t a = 0; a < st_.x.size(); ++a) {
        if (rep.letter_type(a) == LetterType::TopFlip) tf += st_.x[a];
        if (rep.letter_type(a) == LetterType::BottomFlip) bf += st_.x[a];
      }
      for (size_t a = 0; a < st_.x.size(); ++a)
        if (rep.letter_type(a) == LetterType::TopFlip) st_.x[a] *= bf / tf;
    }
  }

  const RauzyDiagram& d_;
  int base_;
  SectionConfig cfg_;
  std::mt19937_64 rng_;
  WidthState st_;
};

// Tracks occurrences of theta as a factor of the move stream that start at
// the base vertex.
class ThetaTracker {
 public:
  ThetaTracker(const RauzyWord& theta, int base) : theta_(theta), base_(base) {
    // KMP failure table
    fail_.assign(theta_.size() + 1, 0);
    for (size_t i = 1; i < theta_.size(); ++i) {
      size_t k = fail_[i];
      while (k && theta_[i] != theta_[k]) k = fail_[k];
      fail_[i + 1] = theta_[i] == theta_[k] ? k + 1 : 0;
    }
    ring_.assign(theta_.size() + 1, -1);
  }

  // feed the vertex *before* the move and the move letter; true on a valid
  // section hit (theta occurrence starting at the base vertex).
  bool feed(int vertex_before, Side s) {
    ring_[pos_ % ring_.size()] = vertex_before;
    ++pos_;
    while (state_ && theta_[state_] != s) state_ = fail_[state_];
    if (theta_[state_] == s) ++state_;
    if (state_ == theta_.size()) {
      state_ = fail_[state_];
      size_t start = pos_ - theta_.size();
      return ring_[start % ring_.size()] == base_;
    }
    return false;
  }

 private:
  RauzyWord theta_;
  int base_;
  std::vector<size_t> fail_;
  std::vector<int> ring_;
  size_t pos_ = 0;
  size_t state_ = 0;
};

struct ChainResult {
  std::vector<std::vector<double>> batch_logs;  // per batch, per direction
  std::vector<double> batch_roofs;
  size_t tie_incidents = 0;
  double total_roof = 0;
  size_t samples = 0;
};

ChainResult run_chain(const PieceCache& pc, const SectionConfig& cfg, uint64_t seed,
                      size_t samples, size_t batches) {
  const RauzyDiagram& d = pc.diagram;
  Simulator sim(d, pc.base, cfg, seed);
  ThetaTracker tracker(cfg.theta, pc.base);
  ChainResult res;
  size_t k = pc.dim;
  DMat frame = DMat::identity(k);
  DMat pending = DMat::identity(k);
  std::vector<double> acc_logs(k, 0.0);
  double acc_roof = 0;
  size_t returns_done = 0, since_qr = 0;
  size_t per_batch = std::max<size_t>(1, samples / std::max<size_t>(1, batches));
  std::vector<double> batch_logs(k, 0.0);
  double batch_roof = 0;
  size_t in_batch = 0;
  bool primed = false;  // saw the first valid hit
  size_t burn = cfg.burn_in;

  auto flush_batch = [&]() {
    if (in_batch == 0) return;
    res.batch_logs.push_back(batch_logs);
    res.batch_roofs.push_back(batch_roof);
    std::fill(batch_logs.begin(), batch_logs.end(), 0.0);
    batch_roof = 0;
    in_batch = 0;
  };

  auto do_qr = [&]() {
    std::vector<double> logs = qr_accumulate(frame);
    for (size_t i = 0; i < k; ++i) {
      acc_logs[i] += logs[i];
      batch_logs[i] += logs[i];
    }
    since_qr = 0;
  };

  while (returns_done < samples) {
    int vb = sim.vertex();
    std::optional<Side> s = sim.step();
    if (!s) {
      // tie: the chain restarted; discard the partial excursion
      tracker = ThetaTracker(cfg.theta, pc.base);
      pending = DMat::identity(k);
      primed = false;
      burn = cfg.burn_in;
      continue;
    }
    pending = pc.edge[vb][*s == Side::Top ? 0 : 1] * pending;
    if (!tracker.feed(vb, *s)) continue;
    // section hit
    Rat norm = sim.normalize();
    if (!primed) {
      primed = true;
      pending = DMat::identity(k);
      continue;
    }
    double roof = -std::log(rat_to_double(norm));
    if (burn > 0) {
      --burn;
      pending = DMat::identity(k);
      continue;
    }
    // accumulate the return
    frame = pending * frame;
    pending = DMat::identity(k);
    ++since_qr;
    acc_roof += roof;
    batch_roof += roof;
    ++in_batch;
    ++returns_done;
    if (since_qr >= cfg.renorm_cadence || in_batch >= per_batch) do_qr();
    if (in_batch >= per_batch) flush_batch();
  }
  if (since_qr > 0) do_qr();
  flush_batch();
  res.tie_incidents = sim.tie_incidents;
  res.total_roof = acc_roof;
  res.samples = returns_done;
  return res;
}

}  // namespace

std::vector<double> SpectrumEstimate::symmetry_residuals() const {
  std::vector<double> out;
  size_t n = exponents.size();
  for (size_t i = 0; i < n / 2; ++i) out.push_back(std::fabs(exponents[i] + exponents[n - 1 - i]));
  return out;
}

std::vector<double> SpectrumEstimate::symmetry_stderrs() const {
  std::vector<double> out;
  size_t n = exponents.size();
  size_t b = batch_exponents.size();
  for (size_t i = 0; i < n / 2; ++i) {
    double mean = 0;
    std::vector<double> vals;
    for (const auto& lam : batch_exponents) {
      vals.push_back(lam[i] + lam[n - 1 - i]);
      mean += vals.back();
    }
    mean /= b;
    double var = 0;
    for (double v : vals) var += (v - mean) * (v - mean);
    out.push_back(b > 1 ? std::sqrt(var / (b - 1) / b) : 1e9);
  }
  return out;
}

double SpectrumEstimate::gap_stderr(size_t i) const {
  size_t b = batch_exponents.size();
  if (b < 2) return 1e9;
  double mean = 0;
  std::vector<double> vals;
  for (const auto& lam : batch_exponents) {
    vals.push_back(lam[i] - lam[i + 1]);
    mean += vals.back();
  }
  mean /= b;
  double var = 0;
  for (double v : vals) var += (v - mean) * (v - mean);
  return std::sqrt(var / (b - 1) / b);
}

void sample_return_words(const GP& pi, const SectionConfig& cfg_in, size_t count,
                         const std::function<void(const ReturnSample&)>& sink) {
  SectionConfig cfg = cfg_in;
  RauzyDiagram d = build_diagram(pi, true, cfg.diagram_budget);
  int base = d.vertex_of(pi);
  if (cfg.theta.empty()) cfg.theta = find_neat_positive_loop(d, base, 16);
  Simulator sim(d, base, cfg, cfg.seed);
  ThetaTracker tracker(cfg.theta, base);
  RauzyWord word;
  bool primed = false;
  size_t burn = cfg.burn_in, emitted = 0;
  while (emitted < count) {
    int vb = sim.vertex();
    std::optional<Side> s = sim.step();
    if (!s) {
      tracker = ThetaTracker(cfg.theta, base);
      word.clear();
      primed = false;
      burn = cfg.burn_in;
      continue;
    }
    word.push_back(*s);
    if (!tracker.feed(vb, *s)) continue;
    Rat norm = sim.normalize();
    if (!primed) {
      primed = true;
      word.clear();
      continue;
    }
    if (burn > 0) {
      --burn;
      word.clear();
      continue;
    }
    double roof = -std::log(rat_to_double(norm));
    sink({word, roof});
    word.clear();
    ++emitted;
  }
}

SpectrumEstimate estimate_spectrum(const GP& pi, Piece piece, const SectionConfig& cfg_in) {
  SectionConfig cfg = cfg_in;
  PieceCache pc = build_piece_cache(pi, piece, cfg);
  if (cfg.theta.empty()) cfg.theta = find_neat_positive_loop(pc.diagram, pc.base, 16);
  SpectrumEstimate est;
  est.theta = cfg.theta;
  unsigned chains = std::max(1u, cfg.chains);
  size_t per_chain = cfg.samples / chains;
  size_t batches_per_chain = std::max<size_t>(1, cfg.batches / chains);
  std::vector<ChainResult> results(chains);
  std::vector<std::thread> workers;
  for (unsigned c = 0; c < chains; ++c)
    workers.emplace_back([&, c] {
      results[c] =
          run_chain(pc, cfg, cfg.seed * 1000003u + 17 * (c + 1), per_chain, batches_per_chain);
    });
  for (auto& w : workers) w.join();

  size_t k = pc.dim;
  std::vector<double> tot_logs(k, 0.0);
  double tot_roof = 0;
  for (const ChainResult& r : results) {
    est.tie_incidents += r.tie_incidents;
    est.samples += r.samples;
    tot_roof += r.total_roof;
  }
  for (const ChainResult& r : results)
    for (size_t b = 0; b < r.batch_logs.size(); ++b) {
      std::vector<double> lam(k);
      for (size_t i = 0; i < k; ++i) {
        lam[i] = r.batch_roofs[b] > 0 ? r.batch_logs[b][i] / r.batch_roofs[b] : 0.0;
        tot_logs[i] += r.batch_logs[b][i];
      }
      std::sort(lam.begin(), lam.end(), std::greater<double>());
      est.batch_exponents.push_back(std::move(lam));
    }
  est.total_time = tot_roof;
  est.exponents.assign(k, 0.0);
  for (size_t i = 0; i < k; ++i) est.exponents[i] = tot_roof > 0 ? tot_logs[i] / tot_roof : 0.0;
  std::sort(est.exponents.begin(), est.exponents.end(), std::greater<double>());
  est.stderrs.assign(k, 0.0);
  size_t nb = est.batch_exponents.size();
  for (size_t i = 0; i < k; ++i) {
    double mean = 0;
    for (const auto& lam : est.batch_exponents) mean += lam[i];
    mean /= std::max<size_t>(nb, 1);
    double var = 0;
    for (const auto& lam : est.batch_exponents) var += (lam[i] - mean) * (lam[i] - mean);
    est.stderrs[i] = nb > 1 ? std::sqrt(var / (nb - 1) / nb) : 1e9;
  }
  est.low_confidence = nb < 30 || est.samples < 1000;
  return est;
}

}  // namespace rauzy
