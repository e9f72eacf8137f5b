use std::collections::BTreeMap;
use std::path::Path;

use super::{CodegenError, Variant};

/// Placeholders available everywhere in a template.
pub const GLOBAL_PLACEHOLDERS: [&str; 10] = [
    "method_name",
    "description",
    "type_name",
    "order",
    "embedded_order",
    "stage_count",
    "stage_list",
    "constants",
    "y_sum",
    "y_hat_sum",
];

/// Placeholders available inside `{{#stages}}...{{/stages}}`.
pub const STAGE_PLACEHOLDERS: [&str; 5] = ["stage", "stage_var", "stage_arg", "stage_time", "stage_input"];

const KERNEL_FILE: &str = "kernel.rs.tpl";
const ADAPTIVE_FILE: &str = "adaptive.rs.tpl";
const FIXED_FILE: &str = "fixed.rs.tpl";

// Marks a placeholder that expanded to nothing, so its line can be dropped.
const EMPTY_MARK: char = '\u{1}';

#[derive(Debug, Clone, PartialEq)]
enum Node {
    Text(String),
    Var(String),
    Stages(Vec<Node>),
    Variant(Variant, Vec<Node>),
}

/// A parsed template.
#[derive(Debug, Clone, PartialEq)]
pub struct Template {
    name: String,
    nodes: Vec<Node>,
}

enum Tag<'a> {
    Var(&'a str),
    Open(&'a str, Option<&'a str>),
    Close(&'a str),
}

fn parse_tag(body: &str) -> Tag<'_> {
    let body = body.trim();
    if let Some(rest) = body.strip_prefix('#') {
        let mut parts = rest.splitn(2, char::is_whitespace);
        let block = parts.next().unwrap_or("");
        Tag::Open(block, parts.next().map(str::trim))
    } else if let Some(rest) = body.strip_prefix('/') {
        Tag::Close(rest.trim())
    } else {
        Tag::Var(body)
    }
}

impl Template {
    /// Parses `text`, rejecting unknown placeholders and malformed blocks.
    pub fn parse(name: &str, text: &str) -> Result<Self, CodegenError> {
        let err = |offset: usize, message: String| CodegenError::Template {
            template: name.to_string(),
            offset,
            message,
        };
        // Stack of open blocks: (kind, variant, children, start offset).
        let mut stack: Vec<(&str, Option<Variant>, Vec<Node>, usize)> = vec![("", None, Vec::new(), 0)];
        let mut pos = 0;
        while pos < text.len() {
            let Some(open) = text[pos..].find("{{").map(|i| pos + i) else {
                push_text(&mut stack.last_mut().unwrap().2, &text[pos..]);
                break;
            };
            let close = text[open..]
                .find("}}")
                .map(|i| open + i)
                .ok_or_else(|| err(open, "unterminated `{{`".into()))?;
            let mut before = &text[pos..open];
            let mut next = close + 2;
            let tag = parse_tag(&text[open + 2..close]);

            if !matches!(tag, Tag::Var(_)) {
                // A block tag alone on its line takes the whole line with it.
                let line_start = before.rfind('\n').map_or(0, |i| i + 1);
                let at_line_start = before[line_start..].trim().is_empty()
                    && (line_start > 0 || pos == 0 || text[..pos].ends_with('\n'));
                let rest = &text[next..];
                let line_end = rest.find('\n');
                let rest_blank = rest[..line_end.unwrap_or(rest.len())].trim().is_empty();
                if at_line_start && rest_blank {
                    before = &before[..line_start];
                    next += line_end.map_or(rest.len(), |i| i + 1);
                }
            }
            push_text(&mut stack.last_mut().unwrap().2, before);

            match tag {
                Tag::Var(var) => {
                    let in_stages = stack.iter().any(|(kind, ..)| *kind == "stages");
                    let known = GLOBAL_PLACEHOLDERS.contains(&var)
                        || (in_stages && STAGE_PLACEHOLDERS.contains(&var));
                    if !known {
                        let hint = if STAGE_PLACEHOLDERS.contains(&var) {
                            " (only valid inside {{#stages}})"
                        } else {
                            ""
                        };
                        return Err(err(open, format!("unknown placeholder `{var}`{hint}")));
                    }
                    stack.last_mut().unwrap().2.push(Node::Var(var.to_string()));
                }
                Tag::Open("stages", None) => {
                    if stack.iter().any(|(kind, ..)| *kind == "stages") {
                        return Err(err(open, "nested {{#stages}} block".into()));
                    }
                    stack.push(("stages", None, Vec::new(), open));
                }
                Tag::Open("variant", Some(v)) => {
                    if stack.len() > 1 {
                        return Err(err(open, "{{#variant}} must be at top level".into()));
                    }
                    let variant = v
                        .parse::<Variant>()
                        .map_err(|_| err(open, format!("unknown variant `{v}`")))?;
                    stack.push(("variant", Some(variant), Vec::new(), open));
                }
                Tag::Open(block, _) => return Err(err(open, format!("unknown block `#{block}`"))),
                Tag::Close(block) => {
                    if stack.len() == 1 || stack.last().unwrap().0 != block {
                        return Err(err(open, format!("unexpected `{{{{/{block}}}}}`")));
                    }
                    let (kind, variant, children, _) = stack.pop().unwrap();
                    let node = match kind {
                        "stages" => Node::Stages(children),
                        _ => Node::Variant(variant.expect("variant block"), children),
                    };
                    stack.last_mut().unwrap().2.push(node);
                }
            }
            pos = next;
        }
        if stack.len() > 1 {
            let (kind, _, _, at) = stack.pop().unwrap();
            return Err(err(at, format!("unclosed {{{{#{kind}}}}} block")));
        }
        let nodes = stack.pop().unwrap().2;
        Ok(Template {
            name: name.to_string(),
            nodes,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    fn variants(&self) -> Vec<Variant> {
        self.nodes
            .iter()
            .filter_map(|n| match n {
                Node::Variant(v, _) => Some(*v),
                _ => None,
            })
            .collect()
    }

    fn has_stages(&self) -> bool {
        self.nodes.iter().any(|n| matches!(n, Node::Stages(_)))
    }

    fn has_text_outside_variants(&self) -> bool {
        self.nodes
            .iter()
            .any(|n| !matches!(n, Node::Variant(..)) && !matches!(n, Node::Text(t) if t.trim().is_empty()))
    }

    /// Renders the whole template, ignoring variant blocks.
    pub(crate) fn render(&self, ctx: &RenderContext) -> String {
        finish(render_nodes(&self.nodes, ctx, None))
    }

    /// Renders only the body of one variant block.
    pub(crate) fn render_variant(&self, ctx: &RenderContext, variant: Variant) -> Option<String> {
        self.nodes.iter().find_map(|n| match n {
            Node::Variant(v, body) if *v == variant => Some(finish(render_nodes(body, ctx, None))),
            _ => None,
        })
    }
}

fn push_text(nodes: &mut Vec<Node>, text: &str) {
    if text.is_empty() {
        return;
    }
    if let Some(Node::Text(prev)) = nodes.last_mut() {
        prev.push_str(text);
    } else {
        nodes.push(Node::Text(text.to_string()));
    }
}

/// Values substituted into a template.
#[derive(Debug, Clone, Default)]
pub(crate) struct RenderContext {
    pub globals: BTreeMap<&'static str, String>,
    pub stages: Vec<BTreeMap<&'static str, String>>,
}

fn render_nodes(nodes: &[Node], ctx: &RenderContext, stage: Option<usize>) -> String {
    let mut out = String::new();
    for node in nodes {
        match node {
            Node::Text(t) => out.push_str(t),
            Node::Var(name) => {
                let value = stage
                    .and_then(|i| ctx.stages[i].get(name.as_str()))
                    .or_else(|| ctx.globals.get(name.as_str()))
                    .unwrap_or_else(|| panic!("renderer did not provide `{name}`"));
                if value.is_empty() {
                    out.push(EMPTY_MARK);
                } else {
                    out.push_str(value);
                }
            }
            Node::Stages(body) => {
                for i in 0..ctx.stages.len() {
                    out.push_str(&render_nodes(body, ctx, Some(i)));
                }
            }
            Node::Variant(..) => {}
        }
    }
    out
}

/// Drops lines whose only content was empty placeholders.
fn finish(text: String) -> String {
    let mut out = String::with_capacity(text.len());
    for line in text.split_inclusive('\n') {
        if line.contains(EMPTY_MARK) && line.chars().all(|c| c == EMPTY_MARK || c.is_whitespace()) {
            continue;
        }
        out.extend(line.chars().filter(|&c| c != EMPTY_MARK));
    }
    out
}

/// The kernel template plus the adaptive and fixed-step driver templates.
#[derive(Debug, Clone, PartialEq)]
pub struct TemplateSet {
    pub kernel_template: Template,
    pub adaptive_template: Template,
    pub fixed_template: Template,
}

impl TemplateSet {
    /// The templates bundled with the crate.
    pub fn builtin() -> Self {
        Self::from_sources(
            include_str!("../../templates/kernel.rs.tpl"),
            include_str!("../../templates/adaptive.rs.tpl"),
            include_str!("../../templates/fixed.rs.tpl"),
        )
        .expect("bundled templates are valid")
    }

    /// Loads `kernel.rs.tpl`, `adaptive.rs.tpl` and `fixed.rs.tpl` from `dir`.
    pub fn load(dir: &Path) -> Result<Self, CodegenError> {
        let read = |file: &str| {
            let path = dir.join(file);
            std::fs::read_to_string(&path).map_err(|source| CodegenError::Io {
                path: path.clone(),
                message: source.to_string(),
            })
        };
        Self::from_sources(&read(KERNEL_FILE)?, &read(ADAPTIVE_FILE)?, &read(FIXED_FILE)?)
    }

    pub fn from_sources(kernel: &str, adaptive: &str, fixed: &str) -> Result<Self, CodegenError> {
        let kernel_template = Template::parse(KERNEL_FILE, kernel)?;
        let adaptive_template = Template::parse(ADAPTIVE_FILE, adaptive)?;
        let fixed_template = Template::parse(FIXED_FILE, fixed)?;

        let structural = |t: &Template, message: &str| CodegenError::Template {
            template: t.name.clone(),
            offset: 0,
            message: message.to_string(),
        };
        if !kernel_template.has_stages() {
            return Err(structural(&kernel_template, "missing {{#stages}} block"));
        }
        if !kernel_template.variants().is_empty() {
            return Err(structural(
                &kernel_template,
                "variant blocks belong in the driver templates",
            ));
        }
        for (t, wanted) in [
            (&adaptive_template, &Variant::ADAPTIVE[..]),
            (&fixed_template, &Variant::FIXED[..]),
        ] {
            if t.variants() != wanted {
                let names: Vec<_> = wanted.iter().map(|v| v.to_string()).collect();
                return Err(structural(
                    t,
                    &format!("expected exactly the variants {}, in order", names.join(", ")),
                ));
            }
            if t.has_text_outside_variants() {
                return Err(structural(t, "text outside variant blocks"));
            }
        }
        Ok(TemplateSet {
            kernel_template,
            adaptive_template,
            fixed_template,
        })
    }
}
