// Command-line front end over the flowcount C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flowcount/flowcount.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct Globals {
  bool json = false;
  bool report_sp = false;
  unsigned parallel = 1;
};

int exit_code(fc_status s) {
  switch (s) {
    case FC_OK:
      return kExitOk;
    case FC_ERR_VALIDATION:
      return kExitValidation;
    default:
      return kExitInternal;
  }
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

std::vector<const char*> pointers(const std::vector<std::string>& items) {
  std::vector<const char*> out;
  for (const auto& s : items) out.push_back(s.c_str());
  return out;
}

int fail(fc_status s, const std::string& context) {
  const std::string message = fc_last_error();
  // Library messages often already name the command.
  if (message.rfind(context + ":", 0) == 0) std::cerr << "flowcount: " << message << "\n";
  else std::cerr << "flowcount: " << context << ": " << message << "\n";
  return exit_code(s);
}

struct ResultDeleter {
  void operator()(fc_result* r) const { fc_result_destroy(r); }
};
struct NetworkDeleter {
  void operator()(fc_network* n) const { fc_network_destroy(n); }
};
using ResultPtr = std::unique_ptr<fc_result, ResultDeleter>;
using NetworkPtr = std::unique_ptr<fc_network, NetworkDeleter>;

int emit(const Globals& g, const std::string& command, const std::string& input, fc_result* raw) {
  ResultPtr result(raw);
  const std::string value = fc_result_value(result.get());
  const long long sp = fc_result_sp_size(result.get());
  if (g.json) {
    nlohmann::json out;
    out["command"] = command;
    out["input_digest"] = digest(input);
    if (fc_result_is_json(result.get())) {
      out["result"] = nlohmann::json::parse(value);
    } else {
      out["result"] = value;
    }
    out["sp_size"] = sp >= 0 ? nlohmann::json(sp) : nlohmann::json(nullptr);
    out["seconds"] = fc_result_seconds(result.get());
    std::cout << out.dump() << "\n";
  } else {
    std::cout << value << "\n";
    if (g.report_sp && sp >= 0) std::cout << "sp_size " << sp << "\n";
  }
  return kExitOk;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice-point counting for network flow polytopes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit a JSON report");
  app.add_flag("--report-sp", g.report_sp, "Also print the number of special permutations");
  app.add_option("--parallel", g.parallel, "Worker threads for the residue sum")->check(CLI::PositiveNumber);

  std::string file;
  const std::vector<std::pair<std::string, std::string>> network_commands = {
      {"count", "Count integral flows"},
      {"volume", "Normalized volume of the flow polytope"},
      {"polynomial", "Counting polynomial on the chamber of the excess vector"},
      {"ehrhart", "Ehrhart polynomial in t for the dilated excesses"},
      {"reduce", "Reduce a capacitated or cyclic network to an acyclic uncapacitated one"},
      {"chambers", "Enumerate the chambers of the network's root configuration"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : network_commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("network", file, "Network JSON file")->required();
    subs.push_back(sub);
  }

  std::string excess;
  auto* kostant = app.add_subcommand("kostant", "Kostant partition function of A_r");
  kostant->add_option("--excess", excess, "Comma-separated vector a1,...,an (sums to zero)")->required();

  std::string rows, cols;
  auto* transport = app.add_subcommand("transport", "Count nonnegative integer matrices with given margins");
  transport->add_option("--rows", rows, "Comma-separated row sums")->required();
  transport->add_option("--cols", cols, "Comma-separated column sums")->required();

  bool enumerate = false;
  std::size_t limit = 100;
  auto* oracle = app.add_subcommand("oracle", "Brute-force flow enumeration (small inputs)");
  oracle->add_option("network", file, "Network JSON file")->required();
  auto* enum_flag = oracle->add_flag("--enumerate", enumerate, "List flows instead of counting");
  oracle->add_option("--limit", limit, "Maximum number of flows to list")->needs(enum_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  fc_options options{g.parallel};
  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);

  try {
    if (kostant->parsed()) {
      const auto items = split_list(excess);
      const auto ptrs = pointers(items);
      fc_result* r = nullptr;
      const fc_status s = fc_kostant(ptrs.data(), ptrs.size(), &options, &r);
      if (s != FC_OK) return fail(s, "kostant");
      return emit(g, command, excess, r);
    }
    if (transport->parsed()) {
      const auto m = split_list(rows), n = split_list(cols);
      const auto pm = pointers(m), pn = pointers(n);
      fc_result* r = nullptr;
      const fc_status s = fc_transport(pm.data(), pm.size(), pn.data(), pn.size(), &options, &r);
      if (s != FC_OK) return fail(s, "transport");
      return emit(g, command, rows + ";" + cols, r);
    }

    std::string text;
    if (!read_file(file, text)) {
      std::cerr << "flowcount: cannot read " << file << "\n";
      return kExitValidation;
    }
    fc_network* raw = nullptr;
    if (fc_status s = fc_network_from_json(text.c_str(), &raw); s != FC_OK) return fail(s, file);
    NetworkPtr net(raw);

    fc_result* r = nullptr;
    fc_status s = FC_OK;
    std::string name;
    if (oracle->parsed()) {
      name = "oracle";
      s = enumerate ? fc_oracle_enumerate(net.get(), limit, &r) : fc_oracle_count(net.get(), &r);
    } else {
      for (auto* sub : subs) {
        if (sub->parsed()) name = sub->get_name();
      }
      if (name == "count") s = fc_count(net.get(), &options, &r);
      else if (name == "volume") s = fc_volume(net.get(), &options, &r);
      else if (name == "polynomial") s = fc_polynomial(net.get(), &options, &r);
      else if (name == "ehrhart") s = fc_ehrhart(net.get(), &options, &r);
      else if (name == "reduce") s = fc_reduce(net.get(), &r);
      else if (name == "chambers") s = fc_chambers(net.get(), &r);
    }
    if (s != FC_OK) return fail(s, name);
    return emit(g, command, text, r);
  } catch (const std::exception& e) {
    std::cerr << "flowcount: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
