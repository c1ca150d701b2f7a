#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "chordpower/atlas.hpp"
#include "chordpower/error.hpp"

namespace chordpower {

std::string format_fixed(double value, int decimals) {
  if (value == 0.0) value = 0.0;
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  if (ec != std::errc{}) return "nan";
  std::string s(buf, ptr);
  // A tiny negative value can round to "-0.000000".
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

namespace {

double no_negative_zero(double v) { return v == 0.0 ? 0.0 : v; }

template <typename Body>
void write_file(const std::filesystem::path& destination, Body&& body) {
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::IoFailure, "cannot open " + destination.string() + " for writing");
  body(file);
  file.flush();
  if (!file) throw Error(ErrorCode::IoFailure, "write failed: " + destination.string());
}

void write_csv(std::span<const TriadRecord> records, std::ostream& out) {
  out << "direct,inverse,group,pwe,pwe2,utilitarian,flags\n";
  for (const auto& r : records) {
    out << to_string(r.direct) << ',' << to_string(r.inverse) << ',' << to_string(r.group) << ','
        << format_fixed(r.pwe, 6) << ',' << format_fixed(r.pwe2, 6) << ','
        << format_fixed(r.utilitarian, 6) << ',' << join(r.flags, ';') << '\n';
  }
}

void write_json(std::span<const TriadRecord> records, std::ostream& out) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json row;
    row["direct"] = to_string(r.direct);
    row["inverse"] = to_string(r.inverse);
    row["group"] = to_string(r.group);
    row["pwe"] = no_negative_zero(r.pwe);
    row["pwe2"] = no_negative_zero(r.pwe2);
    row["utilitarian"] = no_negative_zero(r.utilitarian);
    auto flags = nlohmann::ordered_json::array();
    for (Flag f : r.flags.list()) flags.push_back(to_string(f));
    row["flags"] = std::move(flags);
    rows.push_back(std::move(row));
  }
  out << rows.dump(2) << '\n';
}

constexpr double kCanvas = 1000.0;
constexpr double kMargin = 60.0;
constexpr double kOctave = 1200.0;
constexpr double kScale = (kCanvas - 2 * kMargin) / kOctave;

double px(double cents) { return kMargin + cents * kScale; }
double py(double cents) { return kCanvas - kMargin - cents * kScale; }

std::string num(double v) { return format_fixed(v, 2); }

}  // namespace

void export_records(std::span<const TriadRecord> records, ExportFormat format, std::ostream& out) {
  if (format == ExportFormat::Csv) {
    write_csv(records, out);
  } else {
    write_json(records, out);
  }
}

std::string export_records(std::span<const TriadRecord> records, ExportFormat format) {
  std::ostringstream out;
  export_records(records, format, out);
  return out.str();
}

void export_records(std::span<const TriadRecord> records, ExportFormat format,
                    const std::filesystem::path& destination) {
  write_file(destination, [&](std::ostream& out) { export_records(records, format, out); });
}

void render_octave_map(std::span<const TriadRecord> records, std::ostream& out) {
  for (const auto& r : records) {
    if (r.direct.voices() != 3) {
      throw Error(ErrorCode::InvalidRecord, "octave map needs triads, got " + to_string(r.direct));
    }
  }

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n"
      << "<style>\n"
      << "  .axis { stroke: #222; stroke-width: 1.5; }\n"
      << "  .grid { stroke: #ddd; stroke-width: 0.75; }\n"
      << "  .mirror { stroke: #999; stroke-dasharray: 6 4; }\n"
      << "  .label { font-family: sans-serif; font-size: 14px; fill: #222; }\n"
      << "  .g1 { fill: #d9822b; fill-opacity: 0.75; stroke: #7a4210; }\n"
      << "  .g2 { fill: #2b6cd9; fill-opacity: 0.75; stroke: #10357a; }\n"
      << "  .g3 { fill: #777; fill-opacity: 0.75; stroke: #333; }\n"
      << "</style>\n"
      << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

  for (int c = 0; c <= 1200; c += 100) {
    out << "<line class=\"grid\" x1=\"" << num(px(c)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(c))
        << "\" y2=\"" << num(py(kOctave)) << "\"/>\n";
    out << "<line class=\"grid\" x1=\"" << num(px(0)) << "\" y1=\"" << num(py(c)) << "\" x2=\""
        << num(px(kOctave)) << "\" y2=\"" << num(py(c)) << "\"/>\n";
    out << "<text class=\"label\" x=\"" << num(px(c)) << "\" y=\"" << num(py(0) + 22)
        << "\" text-anchor=\"middle\">" << c << "</text>\n";
    out << "<text class=\"label\" x=\"" << num(px(0) - 8) << "\" y=\"" << num(py(c) + 5)
        << "\" text-anchor=\"end\">" << c << "</text>\n";
  }
  out << "<line class=\"axis\" x1=\"" << num(px(0)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(kOctave))
      << "\" y2=\"" << num(py(0)) << "\"/>\n";
  out << "<line class=\"axis\" x1=\"" << num(px(0)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(0))
      << "\" y2=\"" << num(py(kOctave)) << "\"/>\n";
  out << "<line class=\"mirror\" x1=\"" << num(px(0)) << "\" y1=\"" << num(py(0)) << "\" x2=\""
      << num(px(kOctave)) << "\" y2=\"" << num(py(kOctave)) << "\"/>\n";
  out << "<text class=\"label\" x=\"500\" y=\"990\" text-anchor=\"middle\">lower interval b/a (cents)</text>\n";
  out << "<text class=\"label\" x=\"16\" y=\"500\" text-anchor=\"middle\" transform=\"rotate(-90 16 500)\">"
         "upper interval c/b (cents)</text>\n";
  out << "<text class=\"label\" x=\"500\" y=\"30\" text-anchor=\"middle\">"
         "triads in the octave: circle G1 (major), square G2 (minor), triangle G3 (symmetric)</text>\n";

  for (const auto& r : records) {
    const double x = r.cents_from_root[0];
    const double y = r.cents_from_root[1] - r.cents_from_root[0];
    if (x < -1e-9 || y < -1e-9 || x > kOctave + 1e-9 || y > kOctave + 1e-9) continue;
    const double cx = px(x);
    const double cy = py(y);
    const double radius = 3.0 + 2.0 * std::abs(r.pwe);
    const std::string data = " data-x=\"" + num(x) + "\" data-y=\"" + num(y) + "\"";
    const std::string title =
        "<title>" + to_string(r.direct) + " pwe=" + num(r.pwe) + "</title>";
    switch (r.group) {
      case Group::G1:
        out << "<circle class=\"g1\" cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(radius)
            << "\"" << data << ">" << title << "</circle>\n";
        break;
      case Group::G2:
        out << "<rect class=\"g2\" x=\"" << num(cx - radius) << "\" y=\"" << num(cy - radius)
            << "\" width=\"" << num(2 * radius) << "\" height=\"" << num(2 * radius) << "\"" << data << ">"
            << title << "</rect>\n";
        break;
      case Group::G3:
        out << "<polygon class=\"g3\" points=\"" << num(cx) << ',' << num(cy - radius) << ' '
            << num(cx - radius) << ',' << num(cy + radius) << ' ' << num(cx + radius) << ','
            << num(cy + radius) << "\"" << data << ">" << title << "</polygon>\n";
        break;
    }
  }
  out << "</svg>\n";
}

std::string render_octave_map(std::span<const TriadRecord> records) {
  std::ostringstream out;
  render_octave_map(records, out);
  return out.str();
}

void render_octave_map(std::span<const TriadRecord> records, const std::filesystem::path& destination) {
  write_file(destination, [&](std::ostream& out) { render_octave_map(records, out); });
}

}  // namespace chordpower
