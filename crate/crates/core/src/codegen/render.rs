use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::template::RenderContext;
use super::{CodegenError, GeneratedModule, TemplateSet, Variant};
use crate::tableau::{render_coefficient_literal, validate_tableau, ButcherTableau, Rational};

const KEYWORDS: [&str; 38] = [
    "as", "async", "await", "break", "const", "continue", "crate", "dyn", "else", "enum", "extern", "false",
    "fn", "for", "if", "impl", "in", "let", "loop", "match", "mod", "move", "mut", "pub", "ref", "return",
    "self", "static", "struct", "super", "trait", "true", "type", "unsafe", "use", "where", "while", "gen",
];

/// Rendered source of one method: the kernel plus every driver variant.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratedSolver {
    pub method_name: String,
    pub module_name: String,
    pub type_name: String,
    pub kernel: String,
    pub modules: Vec<GeneratedModule>,
}

impl GeneratedSolver {
    /// Contents of the method's source file.
    pub fn file_source(&self) -> String {
        let mut out = self.kernel.clone();
        for m in &self.modules {
            out.push_str(&m.source);
        }
        out
    }
}

/// Module name of a method, its name in lower case.
pub fn module_name(method: &str) -> String {
    method.to_ascii_lowercase()
}

/// Type name of a method's kernel: first letter upper case, the rest lower.
pub fn type_name(method: &str) -> String {
    let lower = method.to_ascii_lowercase();
    let mut chars = lower.chars();
    match chars.next() {
        Some(c) => c.to_ascii_uppercase().to_string() + chars.as_str(),
        None => String::new(),
    }
}

fn nonzero_terms<'a>(
    weights: impl Iterator<Item = &'a Rational>,
) -> impl Iterator<Item = (usize, &'a Rational)> {
    weights
        .enumerate()
        .filter(|(_, w)| !w.is_zero())
        .map(|(j, w)| (j + 1, w))
}

fn sum_expr(terms: &[(String, usize)]) -> String {
    terms
        .iter()
        .map(|(name, j)| format!("{name} * k{j}[a]"))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn doc_line(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Renders the specialized kernel and the five driver variants of `t`.
///
/// Every nonzero coefficient becomes a named constant and terms with a zero
/// coefficient are left out of the arithmetic.
pub fn render_solver_source(
    t: &ButcherTableau,
    templates: &TemplateSet,
) -> Result<GeneratedSolver, CodegenError> {
    let report = validate_tableau(t);
    if !report.is_ok() {
        return Err(CodegenError::InvalidTableau(report.to_string()));
    }
    let module = module_name(t.name());
    if KEYWORDS.contains(&module.as_str()) {
        return Err(CodegenError::InvalidTableau(format!(
            "{}: lower-cased name is a reserved word",
            t.name()
        )));
    }
    let s = t.stages();

    let mut constants = String::new();
    let mut constant = |name: String, value: &Rational| {
        writeln!(
            constants,
            "const {name}: f64 = {};",
            render_coefficient_literal(value)
        )
        .unwrap();
        name
    };

    let mut stages = Vec::with_capacity(s);
    for i in 0..s {
        let terms: Vec<(String, usize)> = nonzero_terms(t.a()[i][..i].iter())
            .map(|(j, a)| (constant(format!("A_{}_{}", i + 1, j), a), j))
            .collect();
        let time = if t.c()[i].is_zero() {
            "t".to_string()
        } else {
            format!("t + {} * h", constant(format!("C_{}", i + 1), &t.c()[i]))
        };
        let (arg, input) = if terms.is_empty() {
            (String::new(), "y")
        } else {
            (
                format!(
                    "        for a in 0..n {{\n            arg[a] = y[a] + h * ({});\n        }}",
                    sum_expr(&terms)
                ),
                "arg",
            )
        };
        let mut m = BTreeMap::new();
        m.insert("stage", (i + 1).to_string());
        m.insert("stage_var", format!("k{}", i + 1));
        m.insert("stage_arg", arg);
        m.insert("stage_time", time);
        m.insert("stage_input", input.to_string());
        stages.push(m);
    }
    let b_terms: Vec<(String, usize)> = nonzero_terms(t.b().iter())
        .map(|(j, w)| (constant(format!("B_{j}"), w), j))
        .collect();
    let bh_terms: Vec<(String, usize)> = nonzero_terms(t.b_hat().iter())
        .map(|(j, w)| (constant(format!("BH_{j}"), w), j))
        .collect();

    let type_name = type_name(t.name());
    let mut ctx = RenderContext {
        globals: BTreeMap::new(),
        stages,
    };
    let g = &mut ctx.globals;
    g.insert("method_name", t.name().to_string());
    g.insert("description", doc_line(t.description()));
    g.insert("type_name", type_name.clone());
    g.insert("order", t.order().to_string());
    g.insert("embedded_order", t.embedded_order().to_string());
    g.insert("stage_count", s.to_string());
    g.insert(
        "stage_list",
        (1..=s).map(|i| format!("k{i}")).collect::<Vec<_>>().join(", "),
    );
    g.insert("constants", constants.trim_end().to_string());
    g.insert("y_sum", sum_expr(&b_terms));
    g.insert("y_hat_sum", sum_expr(&bh_terms));

    let kernel = templates.kernel_template.render(&ctx);
    let modules = Variant::ALL
        .iter()
        .map(|&variant| {
            let template = if Variant::ADAPTIVE.contains(&variant) {
                &templates.adaptive_template
            } else {
                &templates.fixed_template
            };
            GeneratedModule {
                method_name: t.name().to_string(),
                variant,
                source: template
                    .render_variant(&ctx, variant)
                    .expect("template sets carry every variant"),
            }
        })
        .collect();
    Ok(GeneratedSolver {
        method_name: t.name().to_string(),
        module_name: module,
        type_name,
        kernel,
        modules,
    })
}

/// Source of the index module that declares every generated method.
pub fn render_index(solvers: &[GeneratedSolver]) -> String {
    let mut out = String::from(
        "//! Index of the generated solvers.\n//!\n//! Generated by `forge generate` from the method file. Do not edit.\n\n",
    );
    for s in solvers {
        writeln!(out, "pub mod {};", s.module_name).unwrap();
    }
    if !solvers.is_empty() {
        out.push('\n');
    }
    out.push_str("use crate::stepcontrol::{ErkKernel, OdeProblem, StageBuffer};\n\n");
    out.push_str("/// Every generated kernel, in method-file order.\n");
    out.push_str("#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]\npub enum GeneratedMethod {\n");
    for s in solvers {
        writeln!(out, "    {},", s.type_name).unwrap();
    }
    out.push_str("}\n\nimpl GeneratedMethod {\n");
    writeln!(out, "    pub const ALL: [GeneratedMethod; {}] = [", solvers.len()).unwrap();
    for s in solvers {
        writeln!(out, "        GeneratedMethod::{},", s.type_name).unwrap();
    }
    out.push_str("    ];\n\n");
    out.push_str("    pub fn by_name(name: &str) -> Option<Self> {\n");
    out.push_str("        Self::ALL.into_iter().find(|m| m.method_name() == name)\n    }\n\n");
    out.push_str("    pub fn method_name(self) -> &'static str {\n");
    if solvers.is_empty() {
        out.push_str("        match self {}\n");
    } else {
        out.push_str("        match self {\n");
        for s in solvers {
            writeln!(
                out,
                "            GeneratedMethod::{} => \"{}\",",
                s.type_name, s.method_name
            )
            .unwrap();
        }
        out.push_str("        }\n");
    }
    out.push_str("    }\n}\n\n");

    out.push_str("impl ErkKernel<f64> for GeneratedMethod {\n");
    let dispatch = |out: &mut String, call: &str| {
        if solvers.is_empty() {
            out.push_str("        match *self {}\n");
            return;
        }
        out.push_str("        match self {\n");
        for s in solvers {
            writeln!(
                out,
                "            GeneratedMethod::{} => {}::{}.{call},",
                s.type_name, s.module_name, s.type_name
            )
            .unwrap();
        }
        out.push_str("        }\n");
    };
    for (sig, call) in [
        ("fn name(&self) -> &str", "name()"),
        ("fn stages(&self) -> usize", "stages()"),
        ("fn order(&self) -> u32", "order()"),
        ("fn embedded_order(&self) -> u32", "embedded_order()"),
    ] {
        writeln!(out, "    {sig} {{").unwrap();
        dispatch(&mut out, call);
        out.push_str("    }\n\n");
    }
    out.push_str(
        "    fn step<P: OdeProblem<f64> + ?Sized>(\n        &self,\n        problem: &P,\n        t: f64,\n        y: &[f64],\n        h: f64,\n        stages: &mut StageBuffer<f64>,\n        y_next: &mut [f64],\n        y_hat: &mut [f64],\n    ) {\n",
    );
    dispatch(&mut out, "step(problem, t, y, h, stages, y_next, y_hat)");
    out.push_str("    }\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{sample_tableau, shipped_methods};

    fn sample() -> GeneratedSolver {
        render_solver_source(&sample_tableau(), &TemplateSet::builtin()).unwrap()
    }

    fn line_with<'a>(src: &'a str, needle: &str) -> &'a str {
        src.lines()
            .find(|l| l.contains(needle))
            .unwrap_or_else(|| panic!("no line with {needle}"))
    }

    #[test]
    fn sample_stage_lines() {
        let src = sample().file_source();
        assert!(src.contains("const A_2_1: f64 = 1.0;"));
        assert!(src.contains("const A_3_1: f64 = 0.25;"));
        assert!(src.contains("const A_3_2: f64 = 0.25;"));
        assert!(src.contains("arg[a] = y[a] + h * (A_2_1 * k1[a]);"));
        assert!(src.contains("arg[a] = y[a] + h * (A_3_1 * k1[a] + A_3_2 * k2[a]);"));
        let y = line_with(&src, "y_next[a] =");
        assert_eq!(y.trim(), "y_next[a] = y[a] + h * (B_1 * k1[a] + B_2 * k2[a]);");
        assert!(!src.contains("B_3"));
        assert!(src.contains("problem.rhs(t, y, k1);"));
        assert!(src.contains("problem.rhs(t + C_2 * h, arg, k2);"));
    }

    #[test]
    fn identical_weight_rows_render_alike() {
        let t = sample_tableau();
        let t = t.clone().with_b_hat(t.b().to_vec());
        let src = render_solver_source(&t, &TemplateSet::builtin())
            .unwrap()
            .file_source();
        let y = line_with(&src, "y_next[a] =")
            .trim()
            .replace("y_next", "OUT")
            .replace("B_", "W_");
        let yh = line_with(&src, "y_hat[a] =")
            .trim()
            .replace("y_hat", "OUT")
            .replace("BH_", "W_");
        assert_eq!(y, yh);
    }

    #[test]
    fn rendering_is_deterministic() {
        for t in shipped_methods() {
            let a = render_solver_source(&t, &TemplateSet::builtin()).unwrap();
            let b = render_solver_source(&t, &TemplateSet::builtin()).unwrap();
            assert_eq!(a.file_source(), b.file_source());
        }
    }

    #[test]
    fn five_variants_per_method() {
        let s = sample();
        let variants: Vec<_> = s.modules.iter().map(|m| m.variant).collect();
        assert_eq!(variants, Variant::ALL);
        for (m, f) in s.modules.iter().zip([
            "fn solve<",
            "fn solve_last<",
            "fn solve_info<",
            "fn solve_fixed<",
            "fn solve_fixed_last<",
        ]) {
            assert!(m.source.contains(f), "{}: {}", m.variant, m.source);
            assert_eq!(m.method_name, "Sample3");
        }
    }

    #[test]
    fn no_zero_constants_and_no_array_lookups() {
        for t in shipped_methods() {
            let src = render_solver_source(&t, &TemplateSet::builtin())
                .unwrap()
                .file_source();
            for line in src.lines().filter(|l| l.starts_with("const ")) {
                let value: f64 = line
                    .rsplit("= ")
                    .next()
                    .unwrap()
                    .trim_end_matches(';')
                    .parse()
                    .unwrap();
                assert!(value != 0.0, "{}: {line}", t.name());
            }
            assert!(!src.contains("a()[") && !src.contains("b()[") && !src.contains(".c["));
        }
    }

    #[test]
    fn invalid_tableaus_and_reserved_names() {
        let bad = sample_tableau().with_c(2, Rational::ratio(1, 3));
        assert!(matches!(
            render_solver_source(&bad, &TemplateSet::builtin()),
            Err(CodegenError::InvalidTableau(_))
        ));
        let kw = sample_tableau().with_name("Mod");
        assert!(render_solver_source(&kw, &TemplateSet::builtin()).is_err());
    }

    #[test]
    fn names() {
        assert_eq!(type_name("DOPRI5"), "Dopri5");
        assert_eq!(type_name("Fehlberg78B"), "Fehlberg78b");
        assert_eq!(module_name("DPRK546S"), "dprk546s");
    }
}
