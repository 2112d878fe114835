#include "littlewood/quadrature.hpp"

#include <fftw3.h>

#include <algorithm>
#include <atomic>
#include <climits>
#include <limits>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "littlewood/numeric.hpp"

namespace littlewood {

namespace {

constexpr std::size_t kBytesPerSample = sizeof(Complex);
constexpr std::size_t kColumnsPerBlock = 512;

// FFTW's planner is not thread-safe; execution of an existing plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class FftwBuffer {
 public:
  explicit FftwBuffer(std::size_t n)
      : data_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * std::max<std::size_t>(n, 1)))),
        size_(n) {
    if (data_ == nullptr) throw ResourceError("FFT buffer allocation failed", static_cast<long double>(n) * 16);
    std::fill_n(values(), n, Complex{0.0, 0.0});
  }
  ~FftwBuffer() { fftw_free(data_); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;

  fftw_complex* raw() noexcept { return data_; }
  Complex* values() noexcept { return reinterpret_cast<Complex*>(data_); }
  const Complex* values() const noexcept { return reinterpret_cast<const Complex*>(data_); }
  std::size_t size() const noexcept { return size_; }
  std::span<const Complex> view() const noexcept { return {values(), size_}; }

 private:
  fftw_complex* data_;
  std::size_t size_;
};

// In-place backward (e^{+2 pi i jk/N}) transform plan over a given shape.
class BackwardPlan {
 public:
  BackwardPlan(std::span<const int> shape, FftwBuffer& buffer) {
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft(static_cast<int>(shape.size()), shape.data(), buffer.raw(), buffer.raw(),
                          FFTW_BACKWARD, FFTW_ESTIMATE);
    if (plan_ == nullptr) throw Error("FFTW could not create a plan");
  }
  ~BackwardPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  BackwardPlan(const BackwardPlan&) = delete;
  BackwardPlan& operator=(const BackwardPlan&) = delete;

  void execute() const { fftw_execute(plan_); }
  // Buffers must come from fftw_malloc and match the planned size.
  void execute(FftwBuffer& buffer) const { fftw_execute_dft(plan_, buffer.raw(), buffer.raw()); }

 private:
  fftw_plan plan_;
};

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::vector<int> to_int_shape(std::span<const std::int64_t> samples) {
  std::vector<int> shape;
  shape.reserve(samples.size());
  for (std::int64_t n : samples) {
    if (n < 1) throw ParameterError("sample count must be positive");
    if (n > INT_MAX) throw ResourceError("sample count " + std::to_string(n) + " exceeds FFT limits", static_cast<long double>(n) * kBytesPerSample);
    shape.push_back(static_cast<int>(n));
  }
  return shape;
}

// Checks the alias-free condition N_i >= 2 d_i + 1 on the recentred degrees.
void check_sampling(const TrigPoly& f, std::span<const std::int64_t> samples) {
  if (samples.size() != f.rank()) {
    throw ParameterError("grid has " + std::to_string(samples.size()) + " axes, polynomial has rank " +
                         std::to_string(f.rank()));
  }
  const auto degree = recentre(f).poly.degree();
  for (std::size_t a = 0; a < f.rank(); ++a) {
    if (samples[a] < 1) throw ParameterError("sample count must be positive");
    if (samples[a] < 2 * degree[a] + 1) {
      throw AliasingError("axis " + std::to_string(a) + ": N=" + std::to_string(samples[a]) +
                          " < 2d+1=" + std::to_string(2 * degree[a] + 1));
    }
  }
}

long double grid_bytes(std::span<const std::int64_t> samples) {
  long double total = kBytesPerSample;
  for (std::int64_t n : samples) total *= static_cast<long double>(n);
  return total;
}

void check_budget(std::span<const std::int64_t> samples, const QuadratureOptions& options) {
  const long double bytes = grid_bytes(samples);
  if (bytes > static_cast<long double>(options.memory_budget_bytes)) {
    std::string grid;
    for (std::int64_t n : samples) grid += (grid.empty() ? "" : "x") + std::to_string(n);
    throw ResourceError("grid " + grid + " needs " + std::to_string(static_cast<double>(bytes)) +
                            " bytes, budget is " + std::to_string(options.memory_budget_bytes),
                        bytes);
  }
}

unsigned worker_count(const QuadratureOptions& options) {
  unsigned n = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  return std::max(1u, n);
}

double abs_sum(std::span<const Complex> v) {
  return pairwise_sum(v, [](const Complex& z) { return std::abs(z); });
}

double riemann_rank1(const TrigPoly& f, std::int64_t samples) {
  const std::vector<int> shape{static_cast<int>(samples)};
  FftwBuffer buffer(static_cast<std::size_t>(samples));
  BackwardPlan plan(shape, buffer);
  Complex* v = buffer.values();
  for (std::size_t i = 0; i < f.size(); ++i) {
    v[mod_floor(f.frequency(i)[0], samples)] += f.coefficient(i);
  }
  plan.execute();
  return abs_sum(buffer.view()) / static_cast<double>(samples);
}

// Streams the grid column by column along axis 0. The tail axes are
// transformed once per distinct axis-0 residue, then every tail grid point
// gives one length-N_0 column transform whose |.| sum is stored; the column
// sums are combined by pairwise summation so the result does not depend on
// how columns were distributed over threads.
double riemann_streamed(const TrigPoly& f, std::span<const std::int64_t> samples,
                        const QuadratureOptions& options) {
  const std::size_t rank = f.rank();
  const std::int64_t n0 = samples[0];
  const std::vector<std::int64_t> tail_samples(samples.begin() + 1, samples.end());
  const std::vector<int> tail_shape = to_int_shape(tail_samples);
  std::size_t tail_total = 1;
  for (std::int64_t n : tail_samples) tail_total *= static_cast<std::size_t>(n);

  std::vector<std::size_t> tail_stride(rank - 1, 1);
  for (std::size_t a = rank - 1; a-- > 1;) {
    tail_stride[a - 1] = tail_stride[a] * static_cast<std::size_t>(tail_samples[a]);
  }

  // Group terms by their axis-0 residue.
  std::map<std::int64_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < f.size(); ++i) {
    groups[mod_floor(f.frequency(i)[0], n0)].push_back(i);
  }

  std::vector<std::int64_t> residues;
  std::vector<std::unique_ptr<FftwBuffer>> rows;
  residues.reserve(groups.size());
  rows.reserve(groups.size());
  {
    FftwBuffer scratch(tail_total);
    BackwardPlan tail_plan(tail_shape, scratch);
    for (const auto& [residue, members] : groups) {
      auto row = std::make_unique<FftwBuffer>(tail_total);
      Complex* v = row->values();
      for (std::size_t i : members) {
        auto n = f.frequency(i);
        std::size_t idx = 0;
        for (std::size_t a = 1; a < rank; ++a) {
          idx += static_cast<std::size_t>(mod_floor(n[a], samples[a])) * tail_stride[a - 1];
        }
        v[idx] += f.coefficient(i);
      }
      tail_plan.execute(*row);
      residues.push_back(residue);
      rows.push_back(std::move(row));
    }
  }

  std::vector<double> column_sums(tail_total, 0.0);
  const std::vector<int> column_shape{static_cast<int>(n0)};
  FftwBuffer plan_buffer(static_cast<std::size_t>(n0));
  BackwardPlan column_plan(column_shape, plan_buffer);

  const std::size_t blocks = (tail_total + kColumnsPerBlock - 1) / kColumnsPerBlock;
  std::atomic<std::size_t> next_block{0};
  auto work = [&] {
    FftwBuffer column(static_cast<std::size_t>(n0));
    for (std::size_t b = next_block++; b < blocks; b = next_block++) {
      const std::size_t begin = b * kColumnsPerBlock;
      const std::size_t end = std::min(tail_total, begin + kColumnsPerBlock);
      for (std::size_t p = begin; p < end; ++p) {
        Complex* c = column.values();
        std::fill_n(c, column.size(), Complex{0.0, 0.0});
        for (std::size_t g = 0; g < residues.size(); ++g) c[residues[g]] = rows[g]->values()[p];
        column_plan.execute(column);
        column_sums[p] = abs_sum(column.view());
      }
    }
  };

  const unsigned workers = std::min<std::size_t>(worker_count(options), blocks);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  const double total = static_cast<double>(n0) * static_cast<double>(tail_total);
  return pairwise_sum(column_sums) / total;
}

}  // namespace

QuadratureOptions QuadratureOptions::from_environment() {
  QuadratureOptions options;
  if (const char* env = std::getenv("LITTLEWOOD_MEMORY_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw ParameterError(std::string("LITTLEWOOD_MEMORY_BUDGET is not a positive byte count: ") + env);
    }
    options.memory_budget_bytes = static_cast<std::size_t>(v);
  }
  return options;
}

double NormInterval::compounded_rel_err() const {
  double p = 1.0;
  for (double r : axis_rel_err) p *= 1.0 + r;
  return p - 1.0;
}

const Complex& GridEvaluation::at(std::span<const std::int64_t> index) const {
  std::size_t flat = 0;
  for (std::size_t a = 0; a < shape.size(); ++a) {
    flat = flat * static_cast<std::size_t>(shape[a]) + static_cast<std::size_t>(index[a]);
  }
  return values.at(flat);
}

GridEvaluation eval_grid(const TrigPoly& f, std::span<const std::int64_t> samples,
                         const QuadratureOptions& options) {
  check_sampling(f, samples);
  check_budget(samples, options);
  const std::vector<int> shape = to_int_shape(samples);
  std::size_t total = 1;
  for (std::int64_t n : samples) total *= static_cast<std::size_t>(n);

  FftwBuffer buffer(total);
  BackwardPlan plan(shape, buffer);
  Complex* v = buffer.values();
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto n = f.frequency(i);
    std::size_t idx = 0;
    for (std::size_t a = 0; a < f.rank(); ++a) {
      idx = idx * static_cast<std::size_t>(samples[a]) + static_cast<std::size_t>(mod_floor(n[a], samples[a]));
    }
    v[idx] += f.coefficient(i);
  }
  plan.execute();

  GridEvaluation out;
  out.shape.assign(samples.begin(), samples.end());
  out.values.assign(v, v + total);
  return out;
}

double riemann_l1(const TrigPoly& f, std::span<const std::int64_t> samples,
                  const QuadratureOptions& options) {
  check_sampling(f, samples);
  check_budget(samples, options);
  to_int_shape(samples);
  if (f.is_zero()) return 0.0;
  if (f.rank() == 1) return riemann_rank1(f, samples[0]);
  return riemann_streamed(f, samples, options);
}

std::int64_t next_smooth(std::int64_t n) {
  if (n <= 1) return 1;
  for (std::int64_t m = n;; ++m) {
    std::int64_t r = m;
    for (std::int64_t p : {2, 3, 5, 7}) {
      while (r % p == 0) r /= p;
    }
    if (r == 1) return m;
  }
}

std::vector<std::int64_t> certified_grid(std::span<const std::int64_t> degree, double rel_err) {
  if (!(rel_err > 0.0 && rel_err < 1.0)) {
    throw ParameterError("relative error must lie in (0, 1), got " + std::to_string(rel_err));
  }
  const auto active = std::count_if(degree.begin(), degree.end(), [](std::int64_t d) { return d > 0; });
  std::vector<std::int64_t> grid(degree.size(), 1);
  if (active == 0) return grid;
  // Split the budget so that prod(1 + rho_i) = 1 + rel_err over active axes.
  const double per_axis = std::pow(1.0 + rel_err, 1.0 / static_cast<double>(active)) - 1.0;
  for (std::size_t a = 0; a < degree.size(); ++a) {
    if (degree[a] == 0) continue;
    const long double needed = std::ceil(4.0L * std::numbers::pi_v<long double> *
                                         static_cast<long double>(degree[a]) / per_axis);
    if (needed > static_cast<long double>(INT_MAX)) {
      throw ResourceError("axis " + std::to_string(a) + " needs N=" + std::to_string(static_cast<double>(needed)) +
                              " samples, beyond FFT limits",
                          needed * kBytesPerSample);
    }
    grid[a] = next_smooth(std::max<std::int64_t>(static_cast<std::int64_t>(needed), 2 * degree[a] + 1));
  }
  return grid;
}

NormInterval certified_l1(const TrigPoly& f, double rel_err, const QuadratureOptions& options) {
  if (!(rel_err > 0.0 && rel_err < 1.0)) {
    throw ParameterError("relative error must lie in (0, 1), got " + std::to_string(rel_err));
  }
  NormInterval out;
  if (f.is_zero()) {
    out.grid.assign(f.rank(), 1);
    out.degree.assign(f.rank(), 0);
    out.axis_rel_err.assign(f.rank(), 0.0);
    return out;
  }
  const Recentred centred = recentre(f);
  out.degree = centred.poly.degree();
  out.grid = certified_grid(out.degree, rel_err);
  check_budget(out.grid, options);

  double up = 1.0;
  double down = 1.0;
  out.axis_rel_err.resize(f.rank());
  for (std::size_t a = 0; a < f.rank(); ++a) {
    const double rho = 4.0 * std::numbers::pi * static_cast<double>(out.degree[a]) /
                       static_cast<double>(out.grid[a]);
    out.axis_rel_err[a] = rho;
    up *= 1.0 + rho;
    down *= 1.0 - rho;
  }
  out.riemann = riemann_l1(centred.poly, out.grid, options);
  // Transform rounding: the rms error of an FFT of length N is a small
  // multiple of u log2 N times the coefficient l2 norm, and it bounds the
  // error of the grid mean. A one-point grid involves no transform.
  double log_len = 0.0;
  for (std::int64_t n : out.grid) log_len += std::log2(static_cast<double>(n));
  const double unit = std::numeric_limits<double>::epsilon() / 2.0;
  const double fp = log_len > 0.0 ? 8.0 * unit * (log_len + 1.0) * std::sqrt(centred.poly.energy()) : 0.0;
  out.lo = std::max(0.0, out.riemann - fp) / up;
  out.hi = (out.riemann + fp) / down;
  return out;
}

TrigPoly derivative(const TrigPoly& f, std::size_t axis) {
  if (axis >= f.rank()) {
    throw ParameterError("axis " + std::to_string(axis) + " out of range for rank " + std::to_string(f.rank()));
  }
  std::vector<TrigPoly::Term> terms;
  terms.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto n = f.frequency(i);
    const Complex factor{0.0, 2.0 * std::numbers::pi * static_cast<double>(n[axis])};
    terms.push_back({{n.begin(), n.end()}, factor * f.coefficient(i)});
  }
  return TrigPoly(f.rank(), std::move(terms));
}

BernsteinReport bernstein_check(const TrigPoly& f, double rel_err, const QuadratureOptions& options) {
  if (f.rank() != 1) throw ParameterError("Bernstein check needs a rank-1 polynomial");
  BernsteinReport out;
  out.degree = f.degree()[0];
  out.lhs = certified_l1(derivative(f), rel_err, options);
  out.norm = certified_l1(f, rel_err, options);
  // Rounded up by a few ulps: monomials attain the bound with equality.
  out.rhs_bound = 2.0 * std::numbers::pi * static_cast<double>(out.degree) * out.norm.hi *
                  (1.0 + 16.0 * std::numeric_limits<double>::epsilon());
  out.pass = out.lhs.lo <= out.rhs_bound;
  return out;
}

}  // namespace littlewood
