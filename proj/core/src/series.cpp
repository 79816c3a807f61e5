#include "grtor/series.hpp"

#include <algorithm>
#include <sstream>

#include "grtor/error.hpp"

namespace grtor {

BigradedSeries::BigradedSeries(int i_max, int j_max) : i_max_(i_max), j_max_(j_max) {
  if (i_max < 0 || j_max < 0) throw UsageError("series truncation bounds must be nonnegative");
}

long long BigradedSeries::at(int i, int j) const noexcept {
  auto it = coeffs_.find(Cell{i, j});
  return it == coeffs_.end() ? 0 : it->second;
}

void BigradedSeries::set(int i, int j, long long c) {
  if (c < 0) throw NegativeCoefficient(i, j, c);
  if (!in_grid(i, j)) {
    if (c == 0) return;
    throw UsageError("cell (" + std::to_string(i) + ", " + std::to_string(j) + ") outside series bounds");
  }
  if (c == 0) {
    coeffs_.erase(Cell{i, j});
  } else {
    coeffs_[Cell{i, j}] = c;
  }
}

void BigradedSeries::add(int i, int j, long long delta) { set(i, j, at(i, j) + delta); }

long long BigradedSeries::total_units() const noexcept {
  long long s = 0;
  for (const auto& [cell, c] : coeffs_) s += c;
  return s;
}

std::vector<long long> BigradedSeries::layer_sums() const {
  std::vector<long long> out(static_cast<std::size_t>(i_max_) + 1, 0);
  for (const auto& [cell, c] : coeffs_) out[static_cast<std::size_t>(cell.i)] += c;
  return out;
}

long long BigradedSeries::alternating_sum() const noexcept {
  long long s = 0;
  for (const auto& [cell, c] : coeffs_) s += (cell.i % 2 == 0) ? c : -c;
  return s;
}

BigradedSeries BigradedSeries::restricted_to(int j_limit) const {
  BigradedSeries out(i_max_, j_max_);
  for (const auto& [cell, c] : coeffs_) {
    if (cell.j <= j_limit) out.coeffs_[cell] = c;
  }
  return out;
}

BigradedSeries& BigradedSeries::operator+=(const BigradedSeries& other) {
  if (!same_bounds(other)) throw UsageError("series truncation bounds differ");
  for (const auto& [cell, c] : other.coeffs_) coeffs_[cell] += c;
  return *this;
}

std::string BigradedSeries::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [cell, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    if (cell.i > 0) mono += cell.i == 1 ? "z" : "z^" + std::to_string(cell.i);
    if (cell.j > 0) {
      if (!mono.empty()) mono += '*';
      mono += cell.j == 1 ? "t" : "t^" + std::to_string(cell.j);
    }
    if (mono.empty()) {
      out += std::to_string(c);
    } else {
      out += c == 1 ? mono : std::to_string(c) + "*" + mono;
    }
  }
  return out;
}

BigradedSeries subtract_nonnegative(const BigradedSeries& a, const BigradedSeries& b) {
  if (!a.same_bounds(b)) throw UsageError("series truncation bounds differ");
  BigradedSeries out = a;
  for (const auto& [cell, c] : b.coefficients()) {
    long long v = a.at(cell.i, cell.j) - c;
    if (v < 0) throw NegativeCoefficient(cell.i, cell.j, v);
    out.set(cell.i, cell.j, v);
  }
  return out;
}

std::string format_series(const BigradedSeries& s) {
  std::ostringstream os;
  os << s.i_max() << ' ' << s.j_max() << '\n';
  for (const auto& [cell, c] : s.coefficients()) os << cell.i << ' ' << cell.j << ' ' << c << '\n';
  return os.str();
}

namespace {

// Splits into lines with '#' comments removed; keeps 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t n = 0;
  while (std::getline(is, line)) {
    ++n;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.emplace_back(n, line);
  }
  return out;
}

std::vector<long long> integers(const std::string& line, std::size_t line_no, std::size_t expected) {
  std::istringstream is(line);
  std::vector<long long> v;
  long long x = 0;
  while (is >> x) v.push_back(x);
  if (!is.eof() || v.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " integers", line_no, 1);
  }
  return v;
}

}  // namespace

BigradedSeries parse_series(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing 'imax jmax' header", 1, 1);
  auto header = integers(lines[0].second, lines[0].first, 2);
  if (header[0] < 0 || header[1] < 0) throw ParseError("negative truncation bound", lines[0].first, 1);
  BigradedSeries s(static_cast<int>(header[0]), static_cast<int>(header[1]));
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto v = integers(lines[k].second, lines[k].first, 3);
    if (!s.in_grid(static_cast<int>(v[0]), static_cast<int>(v[1]))) {
      throw ParseError("cell outside the declared bounds", lines[k].first, 1);
    }
    if (v[2] < 0) throw ParseError("negative coefficient", lines[k].first, 1);
    s.add(static_cast<int>(v[0]), static_cast<int>(v[1]), v[2]);
  }
  return s;
}

std::string format_betti_table(const BigradedSeries& s) {
  int row_min = 0;
  int row_max = 0;
  bool any = false;
  for (const auto& [cell, c] : s.coefficients()) {
    int r = cell.j - cell.i;
    row_min = any ? std::min(row_min, r) : r;
    row_max = any ? std::max(row_max, r) : r;
    any = true;
  }
  const int cols = s.i_max() + 1;
  std::vector<std::string> header{""};
  std::vector<std::vector<std::string>> cells;
  auto sums = s.layer_sums();
  std::vector<std::string> total{"total:"};
  for (int i = 0; i < cols; ++i) {
    header.push_back(std::to_string(i));
    total.push_back(std::to_string(sums[static_cast<std::size_t>(i)]));
  }
  cells.push_back(header);
  cells.push_back(total);
  if (any) {
    for (int r = row_min; r <= row_max; ++r) {
      std::vector<std::string> line{std::to_string(r) + ":"};
      for (int i = 0; i < cols; ++i) {
        long long c = s.at(i, r + i);
        line.push_back(c == 0 ? "." : std::to_string(c));
      }
      cells.push_back(line);
    }
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(cols) + 1, 0);
  for (const auto& line : cells) {
    for (std::size_t k = 0; k < line.size(); ++k) width[k] = std::max(width[k], line[k].size());
  }
  std::ostringstream os;
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t k = 0; k < line.size(); ++k) {
      std::string pad(width[k] - line[k].size(), ' ');
      text += (k == 0 ? pad + line[k] : " " + pad + line[k]);
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    os << text << '\n';
  }
  return os.str();
}

void CancellationCertificate::canonicalize() {
  std::sort(steps.begin(), steps.end(), [](const Cancellation& x, const Cancellation& y) {
    if (x.page() != y.page()) return x.page() < y.page();
    if (x.i != y.i) return x.i < y.i;
    return x.a < y.a;
  });
}

std::string format_certificate(const CancellationCertificate& cert) {
  std::ostringstream os;
  os << "certificate " << cert.steps.size() << '\n';
  for (const auto& c : cert.steps) os << c.i << ' ' << c.a << ' ' << c.b << '\n';
  return os.str();
}

CancellationCertificate parse_certificate(std::string_view text) {
  auto lines = content_lines(text);
  CancellationCertificate cert;
  if (lines.empty()) throw ParseError("missing 'certificate <count>' header", 1, 1);
  std::istringstream head(lines[0].second);
  std::string word;
  long long count = -1;
  if (!(head >> word >> count) || word != "certificate" || count < 0) {
    throw ParseError("expected 'certificate <count>'", lines[0].first, 1);
  }
  if (static_cast<std::size_t>(count) != lines.size() - 1) {
    throw ParseError("step count does not match header", lines[0].first, 1);
  }
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto v = integers(lines[k].second, lines[k].first, 3);
    cert.steps.push_back({static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])});
  }
  return cert;
}

BigradedSeries subtract_cancellation(const BigradedSeries& h, const Cancellation& c) {
  if (c.a >= c.b) {
    throw InvalidCancellation("cancellation (i=" + std::to_string(c.i) + ", a=" + std::to_string(c.a) +
                              ", b=" + std::to_string(c.b) + ") violates a < b");
  }
  if (c.i < 0 || h.at(c.i + 1, c.a) < 1 || h.at(c.i, c.b) < 1) {
    throw CancellationInfeasible("cancellation (i=" + std::to_string(c.i) + ", a=" + std::to_string(c.a) +
                                 ", b=" + std::to_string(c.b) + ") exceeds available coefficients");
  }
  BigradedSeries out = h;
  out.add(c.i + 1, c.a, -1);
  out.add(c.i, c.b, -1);
  return out;
}

std::string_view to_string(VerifyReason reason) noexcept {
  switch (reason) {
    case VerifyReason::Ok: return "ok";
    case VerifyReason::InvalidStep: return "invalid-step";
    case VerifyReason::InfeasibleStep: return "infeasible-step";
    case VerifyReason::TargetMismatch: return "target-mismatch";
    case VerifyReason::BoundsMismatch: return "bounds-mismatch";
  }
  return "?";
}

VerifyResult verify_certificate(const BigradedSeries& source, const CancellationCertificate& cert,
                                const BigradedSeries& target, std::optional<int> compare_up_to_j) {
  VerifyResult result;
  if (!source.same_bounds(target)) {
    result.reason = VerifyReason::BoundsMismatch;
    return result;
  }
  BigradedSeries h = source;
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    try {
      h = subtract_cancellation(h, cert.steps[k]);
    } catch (const InvalidCancellation&) {
      result.reason = VerifyReason::InvalidStep;
      result.failed_step = k;
      return result;
    } catch (const CancellationInfeasible&) {
      result.reason = VerifyReason::InfeasibleStep;
      result.failed_step = k;
      return result;
    }
  }
  const int limit = compare_up_to_j.value_or(h.j_max());
  for (int i = 0; i <= h.i_max(); ++i) {
    for (int j = 0; j <= std::min(limit, h.j_max()); ++j) {
      if (h.at(i, j) != target.at(i, j)) {
        result.reason = VerifyReason::TargetMismatch;
        result.mismatch = Cell{i, j};
        return result;
      }
    }
  }
  return result;
}

}  // namespace grtor
