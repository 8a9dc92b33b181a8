#include "avghaz/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>

#include <json.hpp>

#include "avghaz/error.hpp"

namespace avghaz::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + what, line);
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ParseError,
                "cannot open '" + path.string() + "' for reading");
  }
  return in;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (text.empty() || res.ec != std::errc{} || res.ptr != end) {
    throw Error(ErrorCode::InvalidArgument,
                "not a decimal number: '" + std::string(text) + "'");
  }
  return value;
}

SurvivalData read_survival_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::vector<Observation> obs;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    view = trim(view);
    if (view.empty()) continue;
    if (!have_header) {
      if (view != "time,status") {
        parse_error(line_no, "expected header 'time,status'");
      }
      have_header = true;
      continue;
    }
    const auto comma = view.find(',');
    if (comma == std::string_view::npos ||
        view.find(',', comma + 1) != std::string_view::npos) {
      parse_error(line_no, "expected exactly two fields 'time,status'");
    }
    double time = 0.0;
    try {
      time = parse_double(view.substr(0, comma));
    } catch (const Error&) {
      parse_error(line_no, "invalid time '" +
                               std::string(trim(view.substr(0, comma))) + "'");
    }
    if (!std::isfinite(time)) {
      throw Error(ErrorCode::NonFiniteTime,
                  "line " + std::to_string(line_no) + ": time is not finite",
                  line_no, time);
    }
    if (time <= 0.0) {
      throw Error(ErrorCode::NonPositiveTime,
                  "line " + std::to_string(line_no) + ": time must be > 0",
                  line_no, time);
    }
    const auto status = trim(view.substr(comma + 1));
    if (status != "0" && status != "1") {
      throw Error(ErrorCode::BadStatus,
                  "line " + std::to_string(line_no) + ": status must be 0 or 1, got '" +
                      std::string(status) + "'",
                  line_no);
    }
    obs.push_back({time, status == "1" ? Status::Event : Status::Censored});
  }
  if (!have_header) parse_error(line_no + 1, "missing header 'time,status'");
  if (obs.empty()) {
    throw Error(ErrorCode::EmptyInput, "no records after the header");
  }
  return SurvivalData::from_observations(std::move(obs));
}

SurvivalData read_survival_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_survival_csv(in);
}

PiecewiseExpModel read_model(std::istream& in) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidModel,
                std::string("model file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cuts") || !doc.contains("hazards")) {
    throw Error(ErrorCode::InvalidModel,
                "model file must be an object with 'cuts' and 'hazards'");
  }
  std::vector<double> cuts;
  std::vector<double> hazards;
  try {
    cuts = doc.at("cuts").get<std::vector<double>>();
    hazards = doc.at("hazards").get<std::vector<double>>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::InvalidModel,
                "'cuts' and 'hazards' must be arrays of numbers");
  }
  return PiecewiseExpModel(std::move(cuts), std::move(hazards));
}

PiecewiseExpModel read_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::InvalidModel,
                "cannot open model file '" + path.string() + "'");
  }
  return read_model(in);
}

std::vector<double> parse_tau_spec(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) throw Error(ErrorCode::InvalidArgument, "empty tau spec");
  if (spec.find(':') != std::string_view::npos) {
    const auto a = spec.find(':');
    const auto b = spec.find(':', a + 1);
    if (b == std::string_view::npos ||
        spec.find(':', b + 1) != std::string_view::npos) {
      throw Error(ErrorCode::InvalidArgument,
                  "grid spec must be start:stop:step");
    }
    return regular_grid(parse_double(spec.substr(0, a)),
                        parse_double(spec.substr(a + 1, b - a - 1)),
                        parse_double(spec.substr(b + 1)));
  }
  std::vector<double> out;
  std::size_t pos = 0;
  while (true) {
    const auto c = spec.find(',', pos);
    out.push_back(parse_double(spec.substr(pos, c - pos)));
    if (c == std::string_view::npos) break;
    pos = c + 1;
  }
  return out;
}

void write_summary_csv(std::ostream& out, const SimulationSummary& summary) {
  out << kSummaryHeader << '\n';
  for (const SummaryRow& r : summary.rows) {
    out << r.n << ',' << format_double(r.tau) << ','
        << format_double(r.true_ah) << ',' << format_double(r.mean_ah) << ','
        << format_double(r.bias) << ',' << format_double(r.mc_se) << ','
        << r.n_defined << ',' << r.n_degenerate << '\n';
  }
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::InvalidArgument,
                  "cannot open '" + tmp.string() + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(ErrorCode::InvalidArgument,
                  "failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::InvalidArgument,
                "cannot move output into place at '" + path.string() + "'");
  }
}

}  // namespace avghaz::io
