//! Analysis reports: serde DTOs and the human-readable rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use spinobstruct_core::groups::{AbelianInvariants, Obstruction, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    /// `finite` or `presented`.
    pub kind: String,
    /// `None` for presented sources, which may be infinite.
    pub order: Option<usize>,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<String>,
    pub z: String,
    pub z_is_identity: bool,
    pub i_star_injective: bool,
    pub abelianization: String,
    pub z_in_abelianization: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRow {
    pub generator: String,
    pub image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub target: String,
    pub rows: Vec<WitnessRow>,
    pub z_image: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub image_order: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<WitnessReport>,
}

impl WitnessReport {
    pub fn new(w: &Witness, generators: &[String]) -> Self {
        WitnessReport {
            target: w.target.clone(),
            rows: generators.iter().zip(&w.images).map(|(g, i)| WitnessRow { generator: g.clone(), image: i.clone() }).collect(),
            z_image: w.z_image.clone(),
            image_order: w.image_order,
            parts: w.parts.iter().map(|p| WitnessReport::new(p, generators)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetReport {
    pub tag: String,
    pub name: String,
    pub exists: bool,
    /// Machine-readable obstruction, absent when a structure exists.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub status: String,
    /// False when the search was bounded and found nothing.
    pub complete: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub step: String,
    pub micros: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub manifold: String,
    pub manifold_type: String,
    pub group: GroupSummary,
    pub spin_c: bool,
    pub spin: bool,
    /// Decimal, since torus counts grow as `2^n`.
    pub spin_count: String,
    pub targets: Vec<TargetReport>,
    /// True iff some requested structure exists: any target, or spin when
    /// no target was given.
    pub exists_any: bool,
    /// Wall-clock timings; only filled on request so that reports stay
    /// byte-identical between runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<Timing>>,
}

pub fn obstruction_text(o: &Obstruction) -> &'static str {
    match o {
        Obstruction::IStarNotInjective => "obstructed: i* not injective",
        Obstruction::ZTrivialInAbelianization => "obstructed: z trivial in the abelianization",
        Obstruction::NoCyclicCharacter => "obstructed: no character sends z to -1",
        Obstruction::NoHomomorphism => "obstructed: no homomorphism sends z to -1",
    }
}

pub fn abelian_text(inv: &AbelianInvariants) -> (String, String) {
    let mut parts: Vec<String> = inv.factors.iter().map(|f| format!("Z/{f}")).collect();
    match inv.free_rank {
        0 => {}
        1 => parts.push("Z".into()),
        r => parts.push(format!("Z^{r}")),
    }
    let group = if parts.is_empty() { "1".to_string() } else { parts.join(" x ") };
    let coords: Vec<String> = inv.z_torsion.iter().chain(&inv.z_free).map(ToString::to_string).collect();
    (group, format!("({})", coords.join(", ")))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_witness(out: &mut String, w: &WitnessReport, indent: usize) {
    let pad = " ".repeat(indent);
    let order = w.image_order.map(|o| format!(", image of order {o}")).unwrap_or_default();
    let _ = writeln!(out, "{pad}into {}{order}", w.target);
    if w.parts.is_empty() {
        let width = w.rows.iter().map(|r| r.generator.len()).max().unwrap_or(1).max(1);
        for r in &w.rows {
            let _ = writeln!(out, "{pad}  {:width$} -> {}", r.generator, r.image);
        }
        let _ = writeln!(out, "{pad}  {:width$} -> {}", "z", w.z_image);
    } else {
        for p in &w.parts {
            render_witness(out, p, indent + 2);
        }
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let g = &self.group;
        let _ = writeln!(out, "manifold: {} ({})", self.manifold, self.manifold_type);
        match g.order {
            Some(n) => {
                let gens = if g.generators.is_empty() { "nothing".to_string() } else { g.generators.join(" ") };
                let _ = writeln!(out, "pi_1(F+): finite, order {n}, generated by {gens}");
            }
            None => {
                let _ = writeln!(out, "pi_1(F+): presented {}", g.presentation.as_deref().unwrap_or("?"));
            }
        }
        let _ = writeln!(out, "  z = {}{}", g.z, if g.z_is_identity { " (trivial)" } else { "" });
        let _ = writeln!(out, "  i* injective: {}", yes_no(g.i_star_injective));
        let _ = writeln!(out, "  abelianization: {}, z -> {}", g.abelianization, g.z_in_abelianization);
        let _ = writeln!(out, "spin^c: {}", yes_no(self.spin_c));
        let _ = writeln!(out, "spin:   {} (spin structures: {})", yes_no(self.spin), self.spin_count);
        if !self.targets.is_empty() {
            let width = self.targets.iter().map(|t| t.name.len()).max().unwrap_or(0);
            let _ = writeln!(out, "Spin^G:");
            for t in &self.targets {
                let _ = writeln!(out, "  {:width$}  {}", t.name, t.status);
            }
            for t in self.targets.iter().filter(|t| t.witness.is_some()) {
                let _ = writeln!(out, "witness for {}:", t.name);
                render_witness(&mut out, t.witness.as_ref().expect("filtered"), 2);
            }
        }
        if let Some(ts) = &self.timings {
            let _ = writeln!(out, "timings:");
            for t in ts {
                let _ = writeln!(out, "  {:24} {:>10.3} ms", t.step, t.micros as f64 / 1000.0);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use spinobstruct_core::groups::{abelianization, Presentation};

    #[test]
    fn abelian_text_orders_torsion_before_free() {
        let p = Presentation::parse("a b z", &["[a,b]", "[a,z]", "[b,z]", "z^2", "b^6"]).unwrap();
        let inv = abelianization(&p, &p.parse_word("z").unwrap());
        let (g, z) = abelian_text(&inv);
        assert_eq!(g, "Z/2 x Z/6 x Z");
        assert!(z.starts_with('(') && z.ends_with(')'));
        let trivial = abelianization(&Presentation::parse("a", &["a"]).unwrap(), &spinobstruct_core::groups::Word::identity());
        assert_eq!(abelian_text(&trivial), ("1".to_string(), "()".to_string()));
    }

    #[test]
    fn status_text_for_every_obstruction() {
        for o in [
            Obstruction::IStarNotInjective,
            Obstruction::ZTrivialInAbelianization,
            Obstruction::NoCyclicCharacter,
            Obstruction::NoHomomorphism,
        ] {
            assert!(obstruction_text(&o).starts_with("obstructed: "));
        }
    }
}
