//! Command execution: resolve arguments into model calls and render the
//! results.

use crate::cli::{
    AssignArgs, AxisArg, Command, CrossingModelArg, EvaluateArgs, FrontierArgs, OutputArgs,
    OutputFormat, PresetsArgs, ResourcesArgs, SweepArgs, TechArgs, VerifyArgs,
};
use crate::render::{csv, float, Json};
use oxbar_core::assign::{self, RingAssignment, RingMode};
use oxbar_core::dse::{self, Strictness, SweepAxis, SweepResult};
use oxbar_core::oracle;
use oxbar_core::{CrossingModel, ImplSpec, LossBreakdown, ModelError, TechParams, Topology};
use std::fs;
use std::path::Path;

/// Frontier CSV sampling: p_crossing from 0 to 0.2 dB in 0.005 steps, with
/// rows kept only while p_propagation stays inside the 0..2 dB/cm plotting
/// range.
const FRONTIER_SAMPLE_STEPS: u32 = 40;
const FRONTIER_CROSSING_MAX_DB: f64 = 0.2;
const FRONTIER_PROPAGATION_MAX: f64 = 2.0;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Model(ModelError),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Model(_) | CliError::Io(_) => 2,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Usage(msg) => msg.clone(),
            CliError::Model(err) => err.to_string(),
            CliError::Io(msg) => msg.clone(),
        }
    }
}

impl From<ModelError> for CliError {
    fn from(err: ModelError) -> Self {
        CliError::Model(err)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Run one subcommand to completion and return its exit code.
pub fn execute(command: Command) -> Result<i32, CliError> {
    let (text, code, output) = match command {
        Command::Evaluate(args) => run_evaluate(args)?,
        Command::Resources(args) => run_resources(args)?,
        Command::Assign(args) => run_assign(args)?,
        Command::Sweep(args) => run_sweep(args)?,
        Command::Frontier(args) => run_frontier(args)?,
        Command::Verify(args) => run_verify(args)?,
        Command::Presets(args) => run_presets(args)?,
    };
    match &output.out {
        Some(path) => fs::write(path, &text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(code)
}

fn strictness_of(lenient: bool) -> Strictness {
    if lenient {
        Strictness::Lenient
    } else {
        Strictness::Strict
    }
}

fn crossing_model_of(arg: CrossingModelArg) -> CrossingModel {
    match arg {
        CrossingModelArg::ZeroExtra => CrossingModel::ZeroExtra,
        CrossingModelArg::CalibratedN8 => CrossingModel::CalibratedN8,
    }
}

fn parse_impl(name: &str) -> Result<ImplSpec, CliError> {
    ImplSpec::parse_name(name).ok_or_else(|| {
        usage(format!(
            "unknown implementation `{name}`; expected one of {}",
            ImplSpec::all()
                .iter()
                .map(|i| i.name())
                .collect::<Vec<_>>()
                .join(", ")
        ))
    })
}

fn parse_topology(name: &str) -> Result<Topology, CliError> {
    Topology::parse(name).ok_or_else(|| {
        usage(format!(
            "unknown topology `{name}`; expected one of {}",
            Topology::ALL
                .iter()
                .map(|t| t.label())
                .collect::<Vec<_>>()
                .join(", ")
        ))
    })
}

/// mm on the command line, cm inside the model.
fn mm_to_cm(mm: f64) -> f64 {
    mm / 10.0
}

fn load_config_presets(path: &Path) -> Result<Vec<TechParams>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| usage(format!("config {} is not valid JSON: {e}", path.display())))?;
    let mut presets = Vec::new();
    let Some(table) = value.get("presets") else {
        return Ok(presets);
    };
    let Some(table) = table.as_object() else {
        return Err(usage(format!(
            "config {}: `presets` must be an object",
            path.display()
        )));
    };
    for (name, entry) in table {
        let coefficient = |key: &str| -> Result<f64, CliError> {
            entry.get(key).and_then(|v| v.as_f64()).ok_or_else(|| {
                usage(format!(
                    "config {}: preset `{name}` needs a numeric `{key}`",
                    path.display()
                ))
            })
        };
        let tech = TechParams::new(
            coefficient("p_propagation_db_per_cm")?,
            coefficient("p_crossing_db")?,
            coefficient("p_drop_db")?,
        )
        .map_err(CliError::Model)?
        .with_name(name.to_ascii_lowercase());
        presets.push(tech);
    }
    Ok(presets)
}

/// Resolve the technology parameters from a preset name or an explicit
/// coefficient triple; presets from a config file shadow the built-ins.
fn resolve_tech(args: &TechArgs) -> Result<TechParams, CliError> {
    let explicit = [args.p_crossing, args.p_propagation, args.p_drop];
    let explicit_given = explicit.iter().filter(|v| v.is_some()).count();

    if args.preset.is_some() && explicit_given > 0 {
        return Err(usage(
            "--preset and explicit loss coefficients are mutually exclusive",
        ));
    }

    if let Some(name) = &args.preset {
        let wanted = name.to_ascii_lowercase();
        if let Some(path) = &args.config {
            if let Some(found) = load_config_presets(path)?
                .into_iter()
                .find(|p| p.name() == Some(wanted.as_str()))
            {
                return Ok(found);
            }
        }
        return TechParams::preset(&wanted)
            .ok_or_else(|| usage(format!("unknown preset `{name}`; see `oxbar presets`")));
    }

    if explicit_given == 3 {
        let tech = TechParams::new(
            args.p_propagation.unwrap(),
            args.p_crossing.unwrap(),
            args.p_drop.unwrap(),
        )
        .map_err(CliError::Model)?;
        return Ok(tech);
    }
    if explicit_given > 0 {
        return Err(usage(
            "explicit loss parameters need all three of --p-crossing, --p-propagation, --p-drop",
        ));
    }
    Err(usage(
        "specify a technology with --preset or with --p-crossing/--p-propagation/--p-drop",
    ))
}

fn tech_json(tech: &TechParams) -> Json {
    Json::Object(vec![
        ("name", Json::opt_str(tech.name())),
        ("p_crossing_db", Json::Float(tech.p_crossing_db())),
        (
            "p_propagation_db_per_cm",
            Json::Float(tech.p_propagation_db_per_cm()),
        ),
        ("p_drop_db", Json::Float(tech.p_drop_db())),
    ])
}

fn breakdown_json(breakdown: &LossBreakdown) -> Json {
    Json::Object(vec![
        ("d_max_cm", Json::Float(breakdown.d_max_cm)),
        ("n_crossing", Json::UInt(breakdown.n_crossing)),
        ("n_drop", Json::UInt(breakdown.n_drop)),
        ("l_waveguide_db", Json::Float(breakdown.l_waveguide_db)),
        ("l_crossing_db", Json::Float(breakdown.l_crossing_db)),
        ("l_drop_db", Json::Float(breakdown.l_drop_db)),
        ("l_total_db", Json::Float(breakdown.l_total_db)),
        (
            "assumptions",
            Json::Array(breakdown.assumptions.iter().map(Json::str).collect()),
        ),
    ])
}

fn breakdown_row(prefix: Vec<String>, breakdown: &LossBreakdown) -> Vec<String> {
    let mut row = prefix;
    row.push(float(breakdown.d_max_cm));
    row.push(breakdown.n_crossing.to_string());
    row.push(breakdown.n_drop.to_string());
    row.push(float(breakdown.l_waveguide_db));
    row.push(float(breakdown.l_crossing_db));
    row.push(float(breakdown.l_drop_db));
    row.push(float(breakdown.l_total_db));
    row
}

const BREAKDOWN_COLUMNS: [&str; 7] = [
    "d_max_cm",
    "n_crossing",
    "n_drop",
    "l_waveguide_db",
    "l_crossing_db",
    "l_drop_db",
    "l_total_db",
];

type Output = (String, i32, OutputArgs);

fn run_evaluate(args: EvaluateArgs) -> Result<Output, CliError> {
    let imp = parse_impl(&args.topology)?;
    let (pitch_cm, die_area) = match (args.pitch, args.die_area) {
        (Some(mm), None) => (mm_to_cm(mm), None),
        (None, Some(area)) => (
            oxbar_core::catalog::pitch_from_die(area, args.n)?,
            Some(area),
        ),
        _ => {
            return Err(usage(
                "exactly one of --pitch (mm) or --die-area (cm^2) is required",
            ))
        }
    };
    let tech = resolve_tech(&args.tech)?;
    let model = crossing_model_of(args.crossing_model);
    let strictness = strictness_of(args.lenient);

    let sweep = dse::sweep_pitch(args.n, &[pitch_cm], &[imp], &tech, &model, strictness)?;
    let breakdown = &sweep.points[0].breakdowns[0];

    let config = Json::Object(vec![
        ("implementation", Json::str(imp.name())),
        ("topology", Json::str(imp.topology().label())),
        ("layout", Json::str(imp.layout().label())),
        ("n", Json::UInt(args.n)),
        ("ports", Json::UInt(args.n * args.n)),
        ("die_area_cm2", Json::opt_float(die_area)),
        ("pitch_cm", Json::Float(pitch_cm)),
        ("tech", tech_json(&tech)),
        ("crossing_model", Json::str(model.label())),
        ("strictness", Json::str(strictness.label())),
    ]);

    let text = match args.output.format {
        OutputFormat::Json => Json::Object(vec![
            ("command", Json::str("evaluate")),
            ("config", config),
            ("result", breakdown_json(breakdown)),
        ])
        .pretty(),
        OutputFormat::Csv => {
            let mut columns = vec!["topology", "layout"];
            columns.extend(BREAKDOWN_COLUMNS);
            let config = with_assumptions(config, breakdown.assumptions.clone());
            csv(
                &config,
                &columns,
                vec![breakdown_row(
                    vec![
                        imp.topology().label().to_string(),
                        imp.layout().label().to_string(),
                    ],
                    breakdown,
                )],
            )
        }
    };
    Ok((text, 0, args.output))
}

fn with_assumptions(config: Json, assumptions: Vec<String>) -> Json {
    let Json::Object(mut fields) = config else {
        return config;
    };
    fields.push((
        "assumptions",
        Json::Array(assumptions.iter().map(Json::str).collect()),
    ));
    Json::Object(fields)
}

fn run_resources(args: ResourcesArgs) -> Result<Output, CliError> {
    let topology = parse_topology(&args.topology)?;
    let counts = oxbar_core::catalog::resource_counts(topology, args.n)?;

    let config = Json::Object(vec![
        ("topology", Json::str(topology.label())),
        ("n", Json::UInt(args.n)),
        ("ports", Json::UInt(args.n * args.n)),
    ]);
    let text = match args.output.format {
        OutputFormat::Json => Json::Object(vec![
            ("command", Json::str("resources")),
            ("config", config),
            (
                "result",
                Json::Object(vec![
                    (
                        "mr_crossbar_initial",
                        Json::UInt(counts.mr_crossbar_initial),
                    ),
                    (
                        "mr_crossbar_reduced",
                        Json::UInt(counts.mr_crossbar_reduced),
                    ),
                    ("mr_receiver", Json::UInt(counts.mr_receiver)),
                    ("lasers", Json::UInt(counts.lasers)),
                    ("min_wavelengths", Json::UInt(counts.min_wavelengths)),
                ]),
            ),
        ])
        .pretty(),
        OutputFormat::Csv => csv(
            &config,
            &[
                "topology",
                "n",
                "mr_crossbar_initial",
                "mr_crossbar_reduced",
                "mr_receiver",
                "lasers",
                "min_wavelengths",
            ],
            vec![vec![
                topology.label().to_string(),
                args.n.to_string(),
                counts.mr_crossbar_initial.to_string(),
                counts.mr_crossbar_reduced.to_string(),
                counts.mr_receiver.to_string(),
                counts.lasers.to_string(),
                counts.min_wavelengths.to_string(),
            ]],
        ),
    };
    Ok((text, 0, args.output))
}

fn assignment_json(assignment: &RingAssignment) -> Json {
    Json::Object(vec![
        ("ports", Json::UInt(assignment.ports as u64)),
        ("mode", Json::str(assignment.mode.label())),
        (
            "wavelength_count",
            Json::UInt(assignment.wavelength_count as u64),
        ),
        (
            "arcs",
            Json::Array(
                assignment
                    .arcs
                    .iter()
                    .map(|arc| {
                        Json::Object(vec![
                            ("src", Json::UInt(arc.src as u64)),
                            ("dst", Json::UInt(arc.dst as u64)),
                            ("wavelength", Json::UInt(arc.wavelength as u64)),
                            ("direction", Json::str(arc.direction.label())),
                            (
                                "segments",
                                Json::Array(
                                    arc.segments.iter().map(|&s| Json::UInt(s as u64)).collect(),
                                ),
                            ),
                        ])
                    })
                    .collect(),
            ),
        ),
    ])
}

fn run_assign(args: AssignArgs) -> Result<Output, CliError> {
    let mode = RingMode::parse(&args.mode).ok_or_else(|| {
        usage(format!(
            "unknown ring mode `{}`; expected c or ccc",
            args.mode
        ))
    })?;
    let ports = args.ports as usize;
    let assignment = match mode {
        RingMode::C => assign::assign_c(ports)?,
        RingMode::CCC => assign::assign_ccc(ports)?,
    };

    let config = Json::Object(vec![
        ("mode", Json::str(mode.label())),
        ("ports", Json::UInt(args.ports)),
    ]);
    let text = match args.output.format {
        OutputFormat::Json => Json::Object(vec![
            ("command", Json::str("assign")),
            ("config", config),
            ("result", assignment_json(&assignment)),
        ])
        .pretty(),
        OutputFormat::Csv => {
            let rows = assignment
                .arcs
                .iter()
                .map(|arc| {
                    vec![
                        arc.src.to_string(),
                        arc.dst.to_string(),
                        arc.wavelength.to_string(),
                        arc.direction.label().to_string(),
                        arc.segments
                            .iter()
                            .map(|s| s.to_string())
                            .collect::<Vec<_>>()
                            .join("|"),
                    ]
                })
                .collect();
            let config = with_assumptions(
                Json::Object(vec![
                    ("mode", Json::str(mode.label())),
                    ("ports", Json::UInt(args.ports)),
                    (
                        "wavelength_count",
                        Json::UInt(assignment.wavelength_count as u64),
                    ),
                ]),
                Vec::new(),
            );
            csv(
                &config,
                &["src", "dst", "wavelength", "direction", "segments"],
                rows,
            )
        }
    };
    Ok((text, 0, args.output))
}

fn resolve_sweep_impls(names: &[String]) -> Result<Vec<ImplSpec>, CliError> {
    if names.is_empty() {
        return Err(usage("--topologies needs at least one implementation"));
    }
    if names.iter().any(|n| n.eq_ignore_ascii_case("all")) {
        if names.len() > 1 {
            return Err(usage("`all` cannot be combined with other topologies"));
        }
        return Ok(ImplSpec::all());
    }
    let mut impls = Vec::new();
    for name in names {
        let imp = parse_impl(name)?;
        if !impls.contains(&imp) {
            impls.push(imp);
        }
    }
    Ok(impls)
}

fn sweep_output(result: &SweepResult, config: Json, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let points = result
                .points
                .iter()
                .map(|point| {
                    let entries = result
                        .impls
                        .iter()
                        .zip(&point.breakdowns)
                        .map(|(imp, breakdown)| {
                            let Json::Object(fields) = breakdown_json(breakdown) else {
                                unreachable!()
                            };
                            let mut entry = vec![
                                ("implementation", Json::str(imp.name())),
                                ("topology", Json::str(imp.topology().label())),
                                ("layout", Json::str(imp.layout().label())),
                            ];
                            entry.extend(fields);
                            Json::Object(entry)
                        })
                        .collect();
                    Json::Object(vec![
                        ("axis_value", Json::Float(point.axis_value)),
                        ("entries", Json::Array(entries)),
                    ])
                })
                .collect();
            Json::Object(vec![
                ("command", Json::str("sweep")),
                ("config", config),
                (
                    "result",
                    Json::Object(vec![("points", Json::Array(points))]),
                ),
            ])
            .pretty()
        }
        OutputFormat::Csv => {
            let mut rows = Vec::new();
            let mut assumptions: Vec<String> = Vec::new();
            for point in &result.points {
                for (imp, breakdown) in result.impls.iter().zip(&point.breakdowns) {
                    for a in &breakdown.assumptions {
                        if !assumptions.contains(a) {
                            assumptions.push(a.clone());
                        }
                    }
                    rows.push(breakdown_row(
                        vec![
                            float(point.axis_value),
                            imp.topology().label().to_string(),
                            imp.layout().label().to_string(),
                        ],
                        breakdown,
                    ));
                }
            }
            let mut columns = vec!["axis_value", "topology", "layout"];
            columns.extend(BREAKDOWN_COLUMNS);
            csv(&with_assumptions(config, assumptions), &columns, rows)
        }
    }
}

fn run_sweep(args: SweepArgs) -> Result<Output, CliError> {
    let impls = resolve_sweep_impls(&args.topologies)?;
    let tech = resolve_tech(&args.tech)?;
    let model = crossing_model_of(args.crossing_model);
    let strictness = strictness_of(args.lenient);

    let (result, fixed): (SweepResult, Vec<(&'static str, Json)>) = match args.axis {
        AxisArg::N => {
            let die_area = args
                .die_area
                .ok_or_else(|| usage("n-axis sweeps need --die-area"))?;
            if args.n.is_some() || !args.pitch_values.is_empty() {
                return Err(usage(
                    "n-axis sweeps take --n-values, not --n/--pitch-values",
                ));
            }
            if args.n_values.is_empty() {
                return Err(usage("n-axis sweeps need --n-values"));
            }
            let result = dse::sweep_n(die_area, &args.n_values, &impls, &tech, &model, strictness)?;
            (result, vec![("die_area_cm2", Json::Float(die_area))])
        }
        AxisArg::Pitch => {
            let n = args.n.ok_or_else(|| usage("pitch-axis sweeps need --n"))?;
            if args.die_area.is_some() || !args.n_values.is_empty() {
                return Err(usage(
                    "pitch-axis sweeps take --pitch-values, not --die-area/--n-values",
                ));
            }
            if args.pitch_values.is_empty() {
                return Err(usage("pitch-axis sweeps need --pitch-values"));
            }
            let pitches_cm: Vec<f64> = args.pitch_values.iter().map(|&mm| mm_to_cm(mm)).collect();
            let result = dse::sweep_pitch(n, &pitches_cm, &impls, &tech, &model, strictness)?;
            (result, vec![("n", Json::UInt(n))])
        }
    };

    let mut config_fields = vec![(
        "axis",
        Json::str(match result.axis {
            SweepAxis::GridSide => "n",
            SweepAxis::PitchCm => "pitch",
        }),
    )];
    config_fields.extend(fixed);
    config_fields.push((
        "implementations",
        Json::Array(result.impls.iter().map(|i| Json::str(i.name())).collect()),
    ));
    config_fields.push(("tech", tech_json(&tech)));
    config_fields.push(("crossing_model", Json::str(model.label())));
    config_fields.push(("strictness", Json::str(strictness.label())));
    let config = Json::Object(config_fields);

    let text = sweep_output(&result, config, args.output.format);
    Ok((text, 0, args.output))
}

fn run_frontier(args: FrontierArgs) -> Result<Output, CliError> {
    let impl_a = parse_impl(&args.impl_a)?;
    let impl_b = parse_impl(&args.impl_b)?;
    let model = crossing_model_of(args.crossing_model);
    let pitch_cm = mm_to_cm(args.pitch);
    let frontier =
        dse::breakeven_frontier(&impl_a, &impl_b, args.n, pitch_cm, args.p_drop, &model)?;

    let line_fields = match &frontier.line {
        Some(line) => (
            Json::Float(line.slope),
            Json::Float(line.intercept),
            Json::str(match line.wins_below {
                dse::Side::ImplA => impl_a.name(),
                dse::Side::ImplB => impl_b.name(),
                dse::Side::OnLine => unreachable!("a line never wins below itself"),
            }),
        ),
        None => (Json::Null, Json::Null, Json::Null),
    };

    let record = Json::Object(vec![
        ("command", Json::str("frontier")),
        (
            "config",
            Json::Object(vec![
                ("impl_a", Json::str(impl_a.name())),
                ("impl_b", Json::str(impl_b.name())),
                ("n", Json::UInt(args.n)),
                ("pitch_cm", Json::Float(pitch_cm)),
                ("p_drop_db", Json::Float(args.p_drop)),
                ("crossing_model", Json::str(model.label())),
            ]),
        ),
        (
            "result",
            Json::Object(vec![
                ("degenerate", Json::Bool(frontier.is_degenerate())),
                ("delta_d_max_cm", Json::Float(frontier.delta_d_max_cm)),
                ("delta_n_crossing", Json::Int(frontier.delta_n_crossing)),
                ("delta_n_drop", Json::Int(frontier.delta_n_drop)),
                ("slope", line_fields.0),
                ("intercept", line_fields.1),
                ("wins_below", line_fields.2),
            ]),
        ),
    ]);

    let text = match args.output.format {
        OutputFormat::Json => record.pretty(),
        OutputFormat::Csv => {
            let mut rows = Vec::new();
            if let Some(line) = &frontier.line {
                for step in 0..=FRONTIER_SAMPLE_STEPS {
                    let p_crossing =
                        FRONTIER_CROSSING_MAX_DB * step as f64 / FRONTIER_SAMPLE_STEPS as f64;
                    let p_propagation = line.slope * p_crossing + line.intercept;
                    if (0.0..=FRONTIER_PROPAGATION_MAX).contains(&p_propagation) {
                        rows.push(vec![float(p_crossing), float(p_propagation)]);
                    }
                }
            }
            csv(&record, &["p_crossing", "p_propagation"], rows)
        }
    };
    Ok((text, 0, args.output))
}

fn run_verify(args: VerifyArgs) -> Result<Output, CliError> {
    let report = oracle::cross_check(args.max_n)?;
    let mismatch_count = report.mismatches().len();
    let code = if mismatch_count == 0 { 0 } else { 3 };

    let config = Json::Object(vec![("max_n", Json::UInt(args.max_n))]);
    let text = match args.output.format {
        OutputFormat::Json => {
            let checks = report
                .checks
                .iter()
                .map(|check| {
                    Json::Object(vec![
                        ("formula", Json::str(check.formula.clone())),
                        ("n", Json::UInt(check.n)),
                        ("expected", Json::Float(check.expected)),
                        ("actual", Json::Float(check.actual)),
                        ("ok", Json::Bool(check.matches())),
                    ])
                })
                .collect();
            Json::Object(vec![
                ("command", Json::str("verify")),
                ("config", config),
                (
                    "result",
                    Json::Object(vec![
                        ("checks", Json::Array(checks)),
                        ("mismatch_count", Json::UInt(mismatch_count as u64)),
                    ]),
                ),
            ])
            .pretty()
        }
        OutputFormat::Csv => {
            let rows = report
                .checks
                .iter()
                .map(|check| {
                    vec![
                        check.formula.clone(),
                        check.n.to_string(),
                        float(check.expected),
                        float(check.actual),
                        check.matches().to_string(),
                    ]
                })
                .collect();
            csv(&config, &["formula", "n", "expected", "actual", "ok"], rows)
        }
    };
    Ok((text, code, args.output))
}

fn run_presets(args: PresetsArgs) -> Result<Output, CliError> {
    let presets = TechParams::presets();
    let text = match args.output.format {
        OutputFormat::Json => Json::Object(vec![
            ("command", Json::str("presets")),
            (
                "result",
                Json::Array(presets.iter().map(tech_json).collect()),
            ),
        ])
        .pretty(),
        OutputFormat::Csv => {
            let rows = presets
                .iter()
                .map(|p| {
                    vec![
                        p.name().unwrap_or("").to_string(),
                        float(p.p_crossing_db()),
                        float(p.p_propagation_db_per_cm()),
                        float(p.p_drop_db()),
                    ]
                })
                .collect();
            csv(
                &Json::Object(vec![("command", Json::str("presets"))]),
                &[
                    "name",
                    "p_crossing_db",
                    "p_propagation_db_per_cm",
                    "p_drop_db",
                ],
                rows,
            )
        }
    };
    Ok((text, 0, args.output))
}
