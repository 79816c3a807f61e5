#include "grtor/job.hpp"

#include <charconv>
#include <map>
#include <string>
#include <vector>

#include "grtor/error.hpp"

namespace grtor {

namespace {

struct Entry {
  std::string value;
  std::size_t line = 0;
  std::size_t column = 0;
};

using Section = std::multimap<std::string, Entry>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::map<std::string, Section> split(std::string_view text) {
  std::map<std::string, Section> sections;
  std::string current;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    std::string_view line = raw.substr(0, raw.find('#'));
    std::string_view body = trim(line);
    if (body.empty()) continue;
    const std::size_t indent = static_cast<std::size_t>(body.data() - raw.data()) + 1;
    if (body.front() == '[') {
      if (body.back() != ']') throw ParseError("unterminated section header", line_no, indent);
      current = std::string(trim(body.substr(1, body.size() - 2)));
      if (current != "ring" && current != "M" && current != "N" && current != "bounds") {
        throw ParseError("unknown section '" + current + "'", line_no, indent);
      }
      if (sections.contains(current)) throw ParseError("duplicate section '" + current + "'", line_no, indent);
      sections[current];
      continue;
    }
    if (current.empty()) throw ParseError("entry outside a section", line_no, indent);
    auto eq = body.find('=');
    std::string key(trim(body.substr(0, eq)));
    Entry e;
    e.line = line_no;
    if (eq == std::string_view::npos) {
      e.column = indent + body.size();
    } else {
      std::string_view value = trim(body.substr(eq + 1));
      e.value = std::string(value);
      e.column = value.empty() ? indent + eq + 1 : static_cast<std::size_t>(value.data() - raw.data()) + 1;
    }
    if (key.empty()) throw ParseError("missing key", line_no, indent);
    if (key != "relation" && sections[current].contains(key)) {
      throw ParseError("duplicate key '" + key + "'", line_no, indent);
    }
    sections[current].emplace(std::move(key), std::move(e));
  }
  return sections;
}

void check_keys(const Section& s, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, e] : s) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw ParseError("unknown key '" + key + "'", e.line, 1);
  }
}

const Entry* find(const Section& s, const std::string& key) {
  auto it = s.find(key);
  return it == s.end() ? nullptr : &it->second;
}

int parse_int(const Entry& e) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), v);
  if (ec != std::errc{} || ptr != e.value.data() + e.value.size()) {
    throw ParseError("expected an integer, got '" + e.value + "'", e.line, e.column);
  }
  return v;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    std::string item(trim(std::string_view(text).substr(start, comma - start)));
    if (!item.empty()) out.push_back(std::move(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Polynomial> parse_polys(const RingPtr& ring, const Entry& e) {
  if (trim(e.value).empty()) return {};
  try {
    return parse_polynomial_list(ring, e.value);
  } catch (const ParseError& err) {
    throw ParseError(err.what(), e.line, e.column + err.column() - 1);
  }
}

JobModule parse_module(const Section& s, const RingSpec& spec, const std::string& name) {
  check_keys(s, {"ideal", "residue", "rank", "degrees", "relation"});
  const Entry* ideal = find(s, "ideal");
  const Entry* residue = find(s, "residue");
  const Entry* rank = find(s, "rank");
  const int kinds = (ideal != nullptr) + (residue != nullptr) + (rank != nullptr);
  if (kinds != 1) throw ParseError("[" + name + "] needs exactly one of ideal, residue, rank", 0, 1);
  JobModule m;
  m.ideal.spec = spec;
  if (ideal != nullptr || residue != nullptr) {
    m.kind = ideal != nullptr ? JobModule::Kind::Ideal : JobModule::Kind::Residue;
    if (ideal != nullptr) {
      m.ideal.generators = parse_polys(spec.ring, *ideal);
    } else {
      for (std::size_t v = 0; v < spec.ring->nvars(); ++v) m.ideal.generators.push_back(Polynomial::variable(spec.ring, v));
    }
    try {
      m.ideal.validate();
    } catch (const UsageError& err) {
      const Entry& at = ideal != nullptr ? *ideal : *residue;
      throw ParseError(err.what(), at.line, at.column);
    }
    m.presentation = ModulePresentation::cyclic(m.ideal);
    return m;
  }
  m.kind = JobModule::Kind::Presentation;
  m.presentation.spec = spec;
  const int r = parse_int(*rank);
  if (r < 1) throw ParseError("rank must be positive", rank->line, rank->column);
  m.presentation.rank = static_cast<std::size_t>(r);
  if (const Entry* deg = find(s, "degrees")) {
    for (const auto& item : split_list(deg->value)) m.presentation.column_degrees.push_back(parse_int(Entry{item, deg->line, deg->column}));
  } else {
    m.presentation.column_degrees.assign(m.presentation.rank, 0);
  }
  auto [lo, hi] = s.equal_range("relation");
  for (auto it = lo; it != hi; ++it) {
    PolyVector v = parse_polys(spec.ring, it->second);
    if (v.size() != m.presentation.rank) {
      throw ParseError("relation needs " + std::to_string(r) + " entries", it->second.line, it->second.column);
    }
    m.presentation.relations.push_back(std::move(v));
  }
  try {
    m.presentation.validate();
  } catch (const ParseError&) {
    throw;
  } catch (const UsageError& err) {
    throw ParseError(err.what(), rank->line, rank->column);
  }
  return m;
}

}  // namespace

JobSpec parse_job(std::string_view text, std::optional<FieldSpec> field) {
  auto sections = split(text);
  if (!sections.contains("ring")) throw ParseError("missing [ring] section", 0, 1);
  const Section& ring = sections["ring"];
  check_keys(ring, {"field", "variables", "setting", "quotient"});

  FieldSpec k = FieldSpec::rationals();
  if (const Entry* f = find(ring, "field")) {
    try {
      k = FieldSpec::parse(f->value);
    } catch (const UsageError& err) {
      throw ParseError(err.what(), f->line, f->column);
    }
  }
  if (field) k = *field;

  const Entry* vars = find(ring, "variables");
  if (vars == nullptr) throw ParseError("[ring] needs variables", 0, 1);
  std::vector<std::string> names = split_list(vars->value);
  if (names.empty()) throw ParseError("no variables", vars->line, vars->column);
  JobSpec job;
  try {
    job.ring.ring = PolyRing::make(k, names);
  } catch (const UsageError& err) {
    throw ParseError(err.what(), vars->line, vars->column);
  }
  if (const Entry* s = find(ring, "setting")) {
    if (s->value == "graded") {
      job.ring.setting = Setting::Graded;
    } else if (s->value == "local") {
      job.ring.setting = Setting::Local;
    } else {
      throw ParseError("setting must be graded or local", s->line, s->column);
    }
  }
  if (const Entry* q = find(ring, "quotient")) {
    job.ring.quotient = parse_polys(job.ring.ring, *q);
    try {
      job.ring.validate();
    } catch (const UsageError& err) {
      throw ParseError(err.what(), q->line, q->column);
    }
  }
  if (sections.contains("M")) job.m = parse_module(sections["M"], job.ring, "M");
  if (sections.contains("N")) job.n = parse_module(sections["N"], job.ring, "N");
  if (sections.contains("bounds")) {
    const Section& b = sections["bounds"];
    check_keys(b, {"imax", "jmax", "cap"});
    auto read = [&](const char* key, std::optional<int>& out, int min) {
      if (const Entry* e = find(b, key)) {
        out = parse_int(*e);
        if (*out < min) throw ParseError(std::string(key) + " must be at least " + std::to_string(min), e->line, e->column);
      }
    };
    read("imax", job.i_max, 0);
    read("jmax", job.j_max, 0);
    read("cap", job.cap, 0);
  }
  return job;
}

}  // namespace grtor
