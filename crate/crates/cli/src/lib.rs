//! Library side of the `mixedtori` command-line tool: the analysis
//! pipeline, report serialization, the nested-link spec reader and the
//! Newton polygon SVG renderer. The binary in `main.rs` is a thin
//! argument-parsing wrapper so everything here stays testable in-process.

pub mod docvalue;
pub mod nested_spec;
pub mod report;
pub mod svg;

pub use docvalue::Doc;
pub use nested_spec::parse_nested_spec;
pub use report::{analyze, Analysis, ExitClass, Report};
pub use svg::render_polygon_svg;
