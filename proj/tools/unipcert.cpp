// Command-line surface over the orbit-combinatorics library.  JSON is the
// machine interface (default); --text renders compact human output.  Exit
// codes: 0 success, 2 domain error, 1 internal assertion failure.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "unipcert/catalog.hpp"
#include "unipcert/duality.hpp"
#include "unipcert/induction.hpp"
#include "unipcert/json_io.hpp"
#include "unipcert/parabolic.hpp"
#include "unipcert/verify.hpp"

using namespace unipcert;

namespace {

struct FormArgs {
  std::string form = "sp";
  int p = 0, q = 0, n = 0;

  RealForm resolve() const {
    if (form == "sp") return RealForm::sp(p, q);
    if (form == "sostar") return RealForm::so_star(n);
    throw std::invalid_argument("--form must be sp or sostar");
  }
  Family family() const {
    if (form == "sp") return Family::Sp;
    if (form == "sostar") return Family::SOStar;
    throw std::invalid_argument("--form must be sp or sostar");
  }
};

void add_form_flags(CLI::App* cmd, FormArgs& args) {
  cmd->add_option("--form", args.form, "real form family: sp or sostar")
      ->check(CLI::IsMember({"sp", "sostar"}));
  cmd->add_option("--p", args.p, "p for Sp(p,q)");
  cmd->add_option("--q", args.q, "q for Sp(p,q)");
  cmd->add_option("--n", args.n, "n for SO*(2n)");
}

Family parse_family(const std::string& name) {
  if (name == "sp") return Family::Sp;
  if (name == "sostar") return Family::SOStar;
  throw std::invalid_argument("--family must be sp or sostar");
}

void emit(const ojson& j, bool text, const std::string& text_rendering) {
  if (text)
    std::cout << text_rendering << "\n";
  else
    std::cout << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of nilpotent K-orbits and unitarity "
               "certificates for Sp(p,q) and SO*(2n)"};
  app.require_subcommand(1);
  app.fallthrough();
  bool text = false;
  bool json = true;
  app.add_flag("--text", text, "render compact text instead of JSON");
  app.add_flag("--json", json, "render JSON (default)");

  // dual
  std::string shape_text, direction = "CtoB";
  auto* dual_cmd = app.add_subcommand("dual", "Spaltenstein dual of a shape");
  dual_cmd->add_option("--shape", shape_text, "partition, e.g. 2,2")
      ->required();
  dual_cmd->add_option("--direction", direction, "CtoB, BtoC or DtoD")
      ->check(CLI::IsMember({"CtoB", "BtoC", "DtoD"}));

  // infchar
  std::string ic_family = "sp", ic_shape;
  auto* ic_cmd = app.add_subcommand("infchar", "chi' of a shape");
  ic_cmd->add_option("--family", ic_family, "sp or sostar")
      ->check(CLI::IsMember({"sp", "sostar"}));
  ic_cmd->add_option("--shape", ic_shape, "partition, e.g. 1,1,1,1")
      ->required();

  // korbits
  FormArgs ko_form;
  std::string ko_shape;
  auto* ko_cmd = app.add_subcommand("korbits", "K-orbits over a shape");
  add_form_flags(ko_cmd, ko_form);
  ko_cmd->add_option("--shape", ko_shape, "partition")->required();

  // parabolic
  FormArgs pa_form;
  std::string pa_tableau;
  auto* pa_cmd =
      app.add_subcommand("parabolic", "theta-stable datum of a tableau");
  add_form_flags(pa_cmd, pa_form);
  pa_cmd->add_option("--tableau", pa_tableau, "e.g. \"2+ 2-\"")->required();

  // certify
  FormArgs ce_form;
  std::string ce_tableau;
  auto* ce_cmd =
      app.add_subcommand("certify", "unitarity certificate of a tableau");
  add_form_flags(ce_cmd, ce_form);
  ce_cmd->add_option("--tableau", ce_tableau, "e.g. \"2+^2 2-^2\"")
      ->required();

  // special
  FormArgs sp_form;
  std::string sp_dual;
  auto* sp_cmd =
      app.add_subcommand("special", "special unipotent catalog for a dual");
  add_form_flags(sp_cmd, sp_form);
  sp_cmd->add_option("--dual-shape", sp_dual, "dual partition")->required();

  // verify
  std::string ve_check, ve_family;
  int ve_max_n = 6;
  bool ve_all = false;
  auto* ve_cmd = app.add_subcommand("verify", "exhaustive proposition checks");
  ve_cmd->add_option("--check", ve_check, "check id (see --list)");
  ve_cmd->add_option("--family", ve_family, "sp or sostar (default both)")
      ->check(CLI::IsMember({"sp", "sostar"}));
  ve_cmd->add_option("--max-n", ve_max_n, "rank bound (default 6)");
  ve_cmd->add_flag("--all", ve_all, "run every known check");
  bool ve_list = false;
  ve_cmd->add_flag("--list", ve_list, "list known check ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (dual_cmd->parsed()) {
      Partition p = Partition::parse(shape_text);
      DualDirection dir = direction == "CtoB"   ? DualDirection::CtoB
                          : direction == "BtoC" ? DualDirection::BtoC
                                                : DualDirection::DtoD;
      Partition d = spaltenstein_dual(p, dir);
      ojson j;
      j["shape"] = p.str();
      j["direction"] = direction;
      j["dual"] = d.str();
      emit(j, text, d.str());
    } else if (ic_cmd->parsed()) {
      Family fam = parse_family(ic_family);
      Partition p = Partition::parse(ic_shape);
      std::vector<int> raw = chi_prime_raw(p, fam);
      std::string rendered;
      for (size_t i = 0; i < raw.size(); ++i) {
        if (i) rendered += ',';
        rendered += doubled_to_string(raw[i]);
      }
      ojson j;
      j["family"] = ic_family;
      j["shape"] = p.str();
      j["infchar"] = rendered;
      j["infchar_doubled"] = raw;
      emit(j, text, rendered);
    } else if (ko_cmd->parsed()) {
      RealForm rf = ko_form.resolve();
      Partition shape = Partition::parse(ko_shape);
      std::vector<SignedTableau> orbits = enumerate_K_orbits(rf, shape);
      ojson j;
      j["realform"] = to_json(rf);
      j["shape"] = shape.str();
      ojson list = ojson::array();
      std::string lines;
      for (const SignedTableau& t : orbits) {
        list.push_back(t.str());
        lines += t.str() + "\n";
      }
      j["orbits"] = list;
      j["count"] = orbits.size();
      if (!lines.empty()) lines.pop_back();
      emit(j, text, lines);
    } else if (pa_cmd->parsed()) {
      RealForm rf = pa_form.resolve();
      SignedTableau t = SignedTableau::parse(pa_tableau, rf);
      AqDatum datum = aq_datum(t);
      emit(to_json(datum), text, to_json(datum).dump(2));
    } else if (ce_cmd->parsed()) {
      RealForm rf = ce_form.resolve();
      SignedTableau t = SignedTableau::parse(ce_tableau, rf);
      UnitarityCertificate cert = certify(t);
      SpecialEntry entry;
      entry.certificate = cert;
      Partition shape = t.shape();
      UnipotentRecord rec;
      for (UnipotentRecord& r : unip_prime(rf, shape))
        if (r.orbit == t) rec = std::move(r);
      entry.record = std::move(rec);
      ojson j = to_json(entry);
      emit(j, text, j.dump(2));
    } else if (sp_cmd->parsed()) {
      RealForm rf = sp_form.resolve();
      Partition dual = Partition::parse(sp_dual);
      std::vector<SpecialEntry> entries = special_catalog(rf, dual);
      ojson j = ojson::array();
      for (const SpecialEntry& e : entries) j.push_back(to_json(e));
      emit(j, text, j.dump(2));
    } else if (ve_cmd->parsed()) {
      if (ve_list) {
        ojson j = known_checks();
        std::string lines;
        for (const std::string& id : known_checks()) lines += id + "\n";
        if (!lines.empty()) lines.pop_back();
        emit(j, text, lines);
        return 0;
      }
      std::optional<Family> fam;
      if (!ve_family.empty()) fam = parse_family(ve_family);
      std::vector<std::string> ids;
      if (ve_all)
        ids = known_checks();
      else if (!ve_check.empty())
        ids.push_back(ve_check);
      else
        throw std::invalid_argument("verify: give --check <id> or --all");
      bool any_failures = false;
      ojson out = ojson::array();
      std::string lines;
      for (const std::string& id : ids) {
        VerifyReport report = run_check(id, fam, ve_max_n);
        any_failures = any_failures || !report.failures.empty();
        out.push_back(to_json(report));
        lines += report.check + ": " + std::to_string(report.instances) +
                 " instances, " + std::to_string(report.failures.size()) +
                 " failures";
        if (text)
          lines += " (" + std::to_string(report.wall_ms) + " ms)";
        for (const std::string& f : report.failures) lines += "\n  " + f;
        lines += "\n";
      }
      if (!lines.empty()) lines.pop_back();
      emit(out.size() == 1 ? out.front() : out, text, lines);
      if (any_failures) return 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal assertion: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
