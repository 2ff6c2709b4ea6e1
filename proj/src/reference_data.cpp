#include "pfas/reference_data.hpp"

#include <array>

namespace pfas {

namespace {

constexpr std::array<PfasUse, 18> kUses = {{
    {"Integrated Circuits", "photopolymer", "photolithography", "photoresist", "none yet (research stage)"},
    {"Integrated Circuits", "photopolymer", "photolithography", "photoacid generator", "none yet (research stage)"},
    {"Integrated Circuits", "short fluoropolymers", "anti-reflective coating", "low refractive index", "available; not demonstrated in DUV"},
    {"Integrated Circuits", "short-chain PFAS", "developers", "remove unwanted resist pattern", "none yet (research stage)"},
    {"Integrated Circuits", "PFAS additives", "rinsing solutions", "low surface tension", "none yet (research stage)"},
    {"Integrated Circuits", "fluorocarbon gases", "dry etching", "precision in etching", "none yet (research stage)"},
    {"Integrated Circuits", "fluorosurfactants", "wet etching", "improve coating quality", "available (testing and trials stage)"},
    {"Integrated Circuits", "fluoropolymers", "spin-on dielectrics", "leakage blocker", "available"},
    {"Datacenters", "fluorocarbons", "cooling liquids", "refrigerants; thermal management", "available (research stage)"},
    {"PCBs", "fluoropolymer", "laminate material", "flame retardant; dielectric", "redesign equipment and product dimensions"},
    {"PCBs", "fluoropolymer", "protective coating", "temperature stable; dust repellent", "multiple available"},
    {"Capacitors", "fluoropolymers", "dielectric films", "dielectric strength", "multiple available"},
    {"Acoustic equipment", "fluoropolymers", "piezoelectric materials", "mold into thin flexible sheets", "available depending on product function"},
    {"Acoustic equipment", "fluoropolymers", "vent membranes", "hydrophobic", "none yet (research stage)"},
    {"Displays", "fluorinated compounds", "LCD", "dipole moment", "available (e.g. LED or plasma screens)"},
    {"Wiring and cables", "fluoropolymers", "insulating layer", "corrosion, thermal and cracking resistance", "available depending on needed function"},
    {"Lithium-ion batteries", "fluoropolymers", "binder", "electrochemical stability", "none yet (research stage)"},
    {"Lithium-ion batteries", "PFAS salts and additives", "electrolyte", "performance and durability", "available"},
}};

}  // namespace

std::span<const PfasUse> pfas_uses() { return kUses; }

}  // namespace pfas
