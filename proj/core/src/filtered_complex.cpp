#include "grtor/filtered_complex.hpp"

#include <algorithm>
#include <sstream>

#include "grtor/error.hpp"

namespace grtor {

std::size_t FilteredComplex::dim(int i) const {
  if (i < 0 || i > i_max) return 0;
  return levels[static_cast<std::size_t>(i)].size();
}

Matrix FilteredComplex::d(int i) const {
  if (i < 1 || i > i_max) return Matrix(field, dim(i - 1), dim(i));
  return differentials[static_cast<std::size_t>(i) - 1];
}

int FilteredComplex::min_level() const {
  int m = j_max;
  for (const auto& lv : levels) {
    for (int x : lv) m = std::min(m, x);
  }
  return m;
}

int FilteredComplex::max_level() const {
  int m = 0;
  for (const auto& lv : levels) {
    for (int x : lv) m = std::max(m, x);
  }
  return m;
}

std::size_t FilteredComplex::level_count(int i, int j) const {
  if (i < 0 || i > i_max) return 0;
  const auto& lv = levels[static_cast<std::size_t>(i)];
  return static_cast<std::size_t>(std::count(lv.begin(), lv.end(), j));
}

bool FilteredComplex::is_filtered() const {
  for (int i = 1; i <= i_max; ++i) {
    const Matrix& m = differentials[static_cast<std::size_t>(i) - 1];
    const auto& src = levels[static_cast<std::size_t>(i)];
    const auto& dst = levels[static_cast<std::size_t>(i) - 1];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!m(r, c).is_zero() && dst[r] < src[c]) return false;
      }
    }
  }
  return true;
}

bool FilteredComplex::squares_to_zero() const {
  for (int i = 2; i <= i_max; ++i) {
    if (!(d(i - 1) * d(i)).is_zero()) return false;
  }
  return true;
}

void FilteredComplex::validate() const {
  if (i_max < 0 || j_max < 0) throw UsageError("filtered complex bounds must be nonnegative");
  if (levels.size() != static_cast<std::size_t>(i_max) + 1) throw UsageError("filtered complex needs i_max + 1 terms");
  if (differentials.size() != static_cast<std::size_t>(i_max)) throw UsageError("filtered complex needs i_max differentials");
  for (const auto& lv : levels) {
    for (int x : lv) {
      if (x < 0 || x > j_max) throw UsageError("filtration level " + std::to_string(x) + " outside [0, j_max]");
    }
  }
  for (int i = 1; i <= i_max; ++i) {
    const Matrix& m = differentials[static_cast<std::size_t>(i) - 1];
    if (m.rows() != dim(i - 1) || m.cols() != dim(i)) {
      throw UsageError("differential " + std::to_string(i) + " has the wrong shape");
    }
    if (!(m.field() == field)) throw UsageError("differential over another field");
  }
  if (!squares_to_zero()) throw UsageError("differentials do not compose to zero");
  if (!is_filtered()) throw UsageError("differential lowers the filtration level");
}

FilteredComplex gr_complex(const FilteredComplex& l) {
  FilteredComplex g = l;
  for (int i = 1; i <= l.i_max; ++i) {
    Matrix& m = g.differentials[static_cast<std::size_t>(i) - 1];
    const auto& src = l.levels[static_cast<std::size_t>(i)];
    const auto& dst = l.levels[static_cast<std::size_t>(i) - 1];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (dst[r] != src[c]) m(r, c) = Scalar::zero(l.field);
      }
    }
  }
  return g;
}

namespace {

std::vector<std::size_t> indices_at(const std::vector<int>& lv, int j) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < lv.size(); ++b) {
    if (lv[b] == j) out.push_back(b);
  }
  return out;
}

}  // namespace

BigradedSeries level_homology(const FilteredComplex& l) {
  BigradedSeries out(l.i_max, l.j_max);
  for (int i = 1; i <= l.i_max; ++i) {
    const Matrix& m = l.differentials[static_cast<std::size_t>(i) - 1];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!m(r, c).is_zero() && l.levels[static_cast<std::size_t>(i) - 1][r] != l.levels[static_cast<std::size_t>(i)][c]) {
          throw UsageError("level homology needs a level-preserving differential");
        }
      }
    }
  }
  for (int j = 0; j <= l.j_max; ++j) {
    std::vector<std::size_t> ranks(static_cast<std::size_t>(l.i_max) + 2, 0);
    for (int i = 1; i <= l.i_max; ++i) {
      auto rows = indices_at(l.levels[static_cast<std::size_t>(i) - 1], j);
      auto cols = indices_at(l.levels[static_cast<std::size_t>(i)], j);
      ranks[static_cast<std::size_t>(i)] = rank(l.d(i).select_rows(rows).select_columns(cols));
    }
    for (int i = 0; i <= l.i_max; ++i) {
      long long h = static_cast<long long>(l.level_count(i, j)) - static_cast<long long>(ranks[static_cast<std::size_t>(i)]) -
                    static_cast<long long>(ranks[static_cast<std::size_t>(i) + 1]);
      if (h > 0) out.set(i, j, h);
    }
  }
  return out;
}

BigradedSeries level_counts(const FilteredComplex& l) {
  BigradedSeries out(l.i_max, l.j_max);
  for (int i = 0; i <= l.i_max; ++i) {
    for (int x : l.levels[static_cast<std::size_t>(i)]) out.add(i, x, 1);
  }
  return out;
}

std::string serialize(const FilteredComplex& l) {
  std::ostringstream os;
  os << "filtered-complex 1\n";
  os << "field " << l.field.name() << '\n';
  os << "imax " << l.i_max << '\n';
  os << "jmax " << l.j_max << '\n';
  os << "truncated " << (l.truncated ? 1 : 0) << '\n';
  os << "open-top " << (l.open_top ? 1 : 0) << '\n';
  for (int i = 0; i <= l.i_max; ++i) {
    os << "degree " << i << " size " << l.dim(i) << " levels";
    for (int x : l.levels[static_cast<std::size_t>(i)]) os << ' ' << x;
    os << '\n';
  }
  for (int i = 1; i <= l.i_max; ++i) {
    const Matrix& m = l.differentials[static_cast<std::size_t>(i) - 1];
    std::size_t nnz = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) nnz += m(r, c).is_zero() ? 0 : 1;
    }
    os << "differential " << i << " rows " << m.rows() << " cols " << m.cols() << " entries " << nnz << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!m(r, c).is_zero()) os << r << ' ' << c << ' ' << m(r, c).to_string() << '\n';
      }
    }
  }
  os << "end\n";
  return os.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : is_(std::string(text)) {}

  std::istringstream next(std::string_view what) {
    std::string line;
    while (std::getline(is_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return std::istringstream(line);
    }
    throw ParseError("unexpected end of input, expected " + std::string(what), line_no_ + 1, 1);
  }

  std::size_t line() const noexcept { return line_no_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_no_, 1); }

  template <class T>
  T keyed(std::string_view key) {
    auto ls = next(key);
    std::string word;
    T value{};
    if (!(ls >> word >> value) || word != key) fail("expected '" + std::string(key) + " <value>'");
    return value;
  }

 private:
  std::istringstream is_;
  std::size_t line_no_ = 0;
};

}  // namespace

FilteredComplex parse_filtered_complex(std::string_view text) {
  LineReader in(text);
  FilteredComplex l;
  if (in.keyed<int>("filtered-complex") != 1) in.fail("unsupported filtered-complex version");
  try {
    l.field = FieldSpec::parse(in.keyed<std::string>("field"));
  } catch (const ParseError&) {
    throw;
  } catch (const UsageError& e) {
    in.fail(e.what());
  }
  l.i_max = in.keyed<int>("imax");
  l.j_max = in.keyed<int>("jmax");
  if (l.i_max < 0 || l.j_max < 0) in.fail("bounds must be nonnegative");
  l.truncated = in.keyed<int>("truncated") != 0;
  l.open_top = in.keyed<int>("open-top") != 0;
  for (int i = 0; i <= l.i_max; ++i) {
    auto ls = in.next("degree line");
    std::string w1, w2, w3;
    int deg = -1;
    long long size = -1;
    if (!(ls >> w1 >> deg >> w2 >> size >> w3) || w1 != "degree" || w2 != "size" || w3 != "levels" || deg != i ||
        size < 0) {
      in.fail("expected 'degree " + std::to_string(i) + " size <n> levels ...'");
    }
    std::vector<int> lv;
    int x = 0;
    while (ls >> x) lv.push_back(x);
    if (!ls.eof() || static_cast<long long>(lv.size()) != size) in.fail("level vector does not match size");
    l.levels.push_back(std::move(lv));
  }
  for (int i = 1; i <= l.i_max; ++i) {
    auto ls = in.next("differential line");
    std::string w1, w2, w3, w4;
    int deg = -1;
    long long rows = -1, cols = -1, nnz = -1;
    if (!(ls >> w1 >> deg >> w2 >> rows >> w3 >> cols >> w4 >> nnz) || w1 != "differential" || w2 != "rows" ||
        w3 != "cols" || w4 != "entries" || deg != i) {
      in.fail("expected 'differential " + std::to_string(i) + " rows <r> cols <c> entries <n>'");
    }
    if (rows != static_cast<long long>(l.dim(i - 1)) || cols != static_cast<long long>(l.dim(i)) || nnz < 0) {
      in.fail("differential shape does not match the degree sizes");
    }
    Matrix m(l.field, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (long long k = 0; k < nnz; ++k) {
      auto es = in.next("matrix entry");
      long long r = -1, c = -1;
      std::string value;
      if (!(es >> r >> c >> value) || r < 0 || c < 0 || r >= rows || c >= cols) in.fail("bad matrix entry");
      try {
        m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = Scalar(l.field, mpq_class(value));
      } catch (const std::exception&) {
        in.fail("bad scalar '" + value + "'");
      }
    }
    l.differentials.push_back(std::move(m));
  }
  auto ls = in.next("end");
  std::string word;
  if (!(ls >> word) || word != "end") in.fail("expected 'end'");
  try {
    l.validate();
  } catch (const ParseError&) {
    throw;
  } catch (const UsageError& e) {
    in.fail(e.what());
  }
  return l;
}

}  // namespace grtor
