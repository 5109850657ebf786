#include "cachelab/transcript_io.hpp"

#include <charconv>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cachelab {

namespace {

constexpr const char* kMagic = "cachelab-transcript v1";

void write_int_list(std::ostream& out, const std::vector<int>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ',';
    out << values[i];
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, value);
    if (ec != std::errc{} || ptr != text.data() + comma) {
      throw std::invalid_argument("transcript: bad integer list '" + text + "'");
    }
    values.push_back(value);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return values;
}

// key=value tokens after a fixed line tag.
std::map<std::string, std::string> parse_fields(std::istringstream& line) {
  std::map<std::string, std::string> fields;
  std::string token;
  while (line >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("transcript: expected key=value, got '" + token + "'");
    }
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return fields;
}

std::int64_t field_int(const std::map<std::string, std::string>& fields, const std::string& key) {
  const auto it = fields.find(key);
  if (it == fields.end()) throw std::invalid_argument("transcript: missing field '" + key + "'");
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(it->second.data(), it->second.data() + it->second.size(), value);
  if (ec != std::errc{} || ptr != it->second.data() + it->second.size()) {
    throw std::invalid_argument("transcript: bad integer in field '" + key + "'");
  }
  return value;
}

std::string field_str(const std::map<std::string, std::string>& fields, const std::string& key) {
  const auto it = fields.find(key);
  if (it == fields.end()) throw std::invalid_argument("transcript: missing field '" + key + "'");
  return it->second;
}

void write_segment(std::ostream& out, const Segment& seg) {
  const SegmentLabel& l = seg.label;
  out << "segment part=" << l.part << " kind=" << to_string(l.kind) << " i=" << l.i
      << " j=" << l.j << " k=" << l.k << " l=" << l.l << " m1=" << l.m1 << " m2=" << l.m2
      << " bits=" << seg.payload.size_bits() << " payload=" << seg.payload.to_hex() << "\n";
}

}  // namespace

void serialize_transcript(const DeliveryTranscript& transcript, std::ostream& out) {
  const GroupingProfile& profile = transcript.profile;
  out << kMagic << "\n";
  out << "config files=" << transcript.config.n_files << " users=" << transcript.config.n_users
      << " file_bits=" << transcript.config.file_bits << " nprime=" << profile.n_prime
      << " fallback=" << (transcript.fallback ? 1 : 0) << "\n";
  out << "demands ";
  write_int_list(out, profile.original_demands);
  out << "\ngroup_sizes ";
  write_int_list(out, profile.group_sizes);
  out << "\ncanon_users ";
  write_int_list(out, profile.canon_to_orig_user);
  out << "\ncanon_files ";
  write_int_list(out, profile.canon_to_orig_file);
  out << "\n";
  for (int p = 1; p <= 3; ++p) {
    for (const auto& seg : transcript.part(p)) write_segment(out, seg);
  }
  out << "summary part1_bits=" << transcript.part_bits(1)
      << " part2_bits=" << transcript.part_bits(2) << " part3_bits=" << transcript.part_bits(3)
      << " total_bits=" << transcript.total_bits() << "\n";
}

std::string serialize_transcript(const DeliveryTranscript& transcript) {
  std::ostringstream out;
  serialize_transcript(transcript, out);
  return out.str();
}

DeliveryTranscript parse_transcript(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kMagic) {
    throw std::invalid_argument("transcript: missing magic header");
  }

  if (!std::getline(in, line)) throw std::invalid_argument("transcript: missing config line");
  std::istringstream config_line(line);
  std::string tag;
  config_line >> tag;
  if (tag != "config") throw std::invalid_argument("transcript: expected config line");
  const auto config_fields = parse_fields(config_line);
  const SystemConfig config(static_cast<int>(field_int(config_fields, "files")),
                            static_cast<int>(field_int(config_fields, "users")),
                            field_int(config_fields, "file_bits"));
  const bool fallback = field_int(config_fields, "fallback") != 0;
  const int nprime = static_cast<int>(field_int(config_fields, "nprime"));

  auto read_list_line = [&](const std::string& expected_tag) {
    if (!std::getline(in, line)) {
      throw std::invalid_argument("transcript: missing " + expected_tag + " line");
    }
    std::istringstream ls(line);
    std::string got_tag, payload;
    ls >> got_tag >> payload;
    if (got_tag != expected_tag) {
      throw std::invalid_argument("transcript: expected " + expected_tag + " line");
    }
    return parse_int_list(payload);
  };

  DemandVector demands{read_list_line("demands")};
  const std::vector<int> group_sizes = read_list_line("group_sizes");
  const std::vector<int> canon_users = read_list_line("canon_users");
  const std::vector<int> canon_files = read_list_line("canon_files");

  DeliveryTranscript transcript{config, canonicalize_demands(demands, config), fallback, {}, {},
                                {}};
  if (transcript.profile.n_prime != nprime || transcript.profile.group_sizes != group_sizes ||
      transcript.profile.canon_to_orig_user != canon_users ||
      transcript.profile.canon_to_orig_file != canon_files) {
    throw std::invalid_argument("transcript: grouping header inconsistent with demands");
  }

  bool saw_summary = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    ls >> tag;
    if (tag == "segment") {
      const auto fields = parse_fields(ls);
      Segment seg;
      seg.label.part = static_cast<int>(field_int(fields, "part"));
      seg.label.kind = segment_kind_from_string(field_str(fields, "kind"));
      seg.label.i = static_cast<int>(field_int(fields, "i"));
      seg.label.j = static_cast<int>(field_int(fields, "j"));
      seg.label.k = static_cast<int>(field_int(fields, "k"));
      seg.label.l = static_cast<int>(field_int(fields, "l"));
      seg.label.m1 = static_cast<int>(field_int(fields, "m1"));
      seg.label.m2 = static_cast<int>(field_int(fields, "m2"));
      const auto bits = static_cast<std::size_t>(field_int(fields, "bits"));
      seg.payload = BitBlock::from_hex(field_str(fields, "payload"), bits);
      switch (seg.label.part) {
        case 1: transcript.part1.push_back(std::move(seg)); break;
        case 2: transcript.part2.push_back(std::move(seg)); break;
        case 3: transcript.part3.push_back(std::move(seg)); break;
        default: throw std::invalid_argument("transcript: segment part must be 1, 2 or 3");
      }
    } else if (tag == "summary") {
      const auto fields = parse_fields(ls);
      if (field_int(fields, "part1_bits") != transcript.part_bits(1) ||
          field_int(fields, "part2_bits") != transcript.part_bits(2) ||
          field_int(fields, "part3_bits") != transcript.part_bits(3) ||
          field_int(fields, "total_bits") != transcript.total_bits()) {
        throw std::invalid_argument("transcript: summary bit counts do not match segments");
      }
      saw_summary = true;
    } else {
      throw std::invalid_argument("transcript: unexpected line tag '" + tag + "'");
    }
  }
  if (!saw_summary) throw std::invalid_argument("transcript: missing summary line");
  return transcript;
}

DeliveryTranscript parse_transcript(const std::string& text) {
  std::istringstream in(text);
  return parse_transcript(in);
}

}  // namespace cachelab
