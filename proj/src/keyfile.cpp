#include "chaoscrypt/keyfile.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace chaoscrypt {

namespace {

std::string real17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trimmed(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_real(const std::map<std::string, std::string>& kv,
                  const std::string& name) {
  const auto it = kv.find(name);
  if (it == kv.end())
    throw std::runtime_error("key file: missing field '" + name + "'");
  const char* begin = it->second.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw std::runtime_error("key file: malformed real in field '" + name + "'");
  return v;
}

long long parse_int(const std::map<std::string, std::string>& kv,
                    const std::string& name) {
  const auto it = kv.find(name);
  if (it == kv.end())
    throw std::runtime_error("key file: missing field '" + name + "'");
  const char* begin = it->second.c_str();
  char* end = nullptr;
  const long long v = std::strtoll(begin, &end, 10);
  if (end == begin || *end != '\0')
    throw std::runtime_error("key file: malformed integer in field '" + name + "'");
  return v;
}

}  // namespace

std::string serialize_key(const KeyFile& kf) {
  std::ostringstream out;
  out << "schema = " << kf.schema << "\n";
  out << "config = " << kf.config_id << "\n";
  out << "width = " << kf.width << "\n";
  out << "height = " << kf.height << "\n";
  out << "channels = " << kf.channels << "\n";
  out << "r = " << real17(kf.key.r) << "\n";
  out << "r0 = " << real17(kf.key.r0) << "\n";
  out << "qx = " << real17(kf.key.q.x) << "\n";
  out << "qy = " << real17(kf.key.q.y) << "\n";
  out << "qz = " << real17(kf.key.q.z) << "\n";
  out << "qw = " << real17(kf.key.q.w) << "\n";
  return out.str();
}

KeyFile parse_key(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trimmed(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("key file: malformed line '" + line + "'");
    kv[trimmed(line.substr(0, eq))] = trimmed(line.substr(eq + 1));
  }

  KeyFile kf;
  kf.schema = static_cast<int>(parse_int(kv, "schema"));
  if (kf.schema != 1)
    throw std::runtime_error("key file: unsupported schema " +
                             std::to_string(kf.schema));
  const auto cfg = kv.find("config");
  if (cfg == kv.end())
    throw std::runtime_error("key file: missing field 'config'");
  kf.config_id = cfg->second;
  kf.width = static_cast<std::size_t>(parse_int(kv, "width"));
  kf.height = static_cast<std::size_t>(parse_int(kv, "height"));
  kf.channels = static_cast<int>(parse_int(kv, "channels"));
  kf.key.r = parse_real(kv, "r");
  kf.key.r0 = parse_real(kv, "r0");
  kf.key.q.x = parse_real(kv, "qx");
  kf.key.q.y = parse_real(kv, "qy");
  kf.key.q.z = parse_real(kv, "qz");
  kf.key.q.w = parse_real(kv, "qw");
  return kf;
}

void write_key_file(const KeyFile& kf, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open file for writing");
  out << serialize_key(kf);
  if (!out) throw std::runtime_error(path + ": write failed");
}

KeyFile read_key_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_key(buf.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace chaoscrypt
