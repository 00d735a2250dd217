use hypcover::experiments::{
    dominance_row, run_table1_row, width_rows, write_table1_csv, ExperimentRow, RowConfig, WidthKind, TABLE1_HEADER,
};
use hypcover_core::generator::generate;
use hypcover_core::solver::Embedding;
use hypcover_core::{Graph, ModelParams};

fn row(g: &Graph) -> ExperimentRow {
    run_table1_row("g", g, None, &RowConfig::deterministic()).unwrap()
}

#[test]
fn edgeless_graph_row() {
    let r = row(&Graph::empty(10));
    assert!(r.easy);
    assert_eq!(r.dom, 100.0);
    assert_eq!(r.tw, Some(-1));
    assert_eq!((r.greedy, r.two_ad, r.four_ad), (Some(1.0), Some(1.0), Some(1.0)));
    assert_eq!(r.comp, 0);
}

#[test]
fn star_row() {
    let star = Graph::from_edges(51, (1..51).map(|i| (0, i))).0;
    let r = row(&star);
    assert!(r.easy);
    assert_eq!(r.dom, 100.0);
    assert_eq!(r.tw, Some(-1));
    assert_eq!(r.greedy, Some(1.0));
    assert_eq!(r.record()[0..4], ["g", "true", "100", "-1"]);
}

#[test]
fn generated_row_is_mostly_dominant_and_near_optimal() {
    let s = generate(&ModelParams::new(2000, 0.75, 8.0).unwrap(), 7).unwrap();
    let r = run_table1_row("hrg", &s.graph, Some(Embedding::of(&s)), &RowConfig::deterministic()).unwrap();
    assert!(r.easy);
    assert!(r.dom >= 90.0, "dom {}", r.dom);
    let (g, two, four) = (r.greedy.unwrap(), r.two_ad.unwrap(), r.four_ad.unwrap());
    assert!((1.0..=1.05).contains(&g), "greedy {g}");
    assert!(two >= 1.0 && four >= 1.0);
}

#[test]
fn exhausted_budget_leaves_ratios_empty() {
    // Petersen graph: no vertex is removable by any reduction rule.
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let g = Graph::from_edges(10, outer.chain(inner).chain(spokes)).0;
    let config = RowConfig {
        node_budget: Some(1),
        width_cap: 0,
        ..RowConfig::deterministic()
    };
    let r = run_table1_row("tight", &g, None, &config).unwrap();
    assert!(!r.easy);
    assert_eq!((r.greedy, r.two_ad, r.four_ad), (None, None, None));
    assert_eq!(r.record()[4..7], ["", "", ""]);
}

#[test]
fn table_csv_layout() {
    let rows = [row(&Graph::empty(3)), row(&Graph::from_edges(3, [(0, 1), (1, 2)]).0)];
    let mut out = Vec::new();
    write_table1_csv(&mut out, &rows).unwrap();
    let text = String::from_utf8(out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], TABLE1_HEADER.join(","));
    assert_eq!(lines.len(), 3);
    assert!(lines.iter().all(|l| l.split(',').count() == 8));
}

#[test]
fn dominance_and_width_rows() {
    let s = generate(&ModelParams::new(1000, 0.75, 8.0).unwrap(), 1).unwrap();
    let d = dominance_row(&s, None).unwrap();
    assert!(d.inner_dominant <= d.inner);
    assert_eq!(d.success, d.inner_dominant == d.inner);
    let rows = width_rows(&s, &[8, 64]).unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0].kind, WidthKind::OuterBand);
    // More vertices can only add arcs.
    assert!(rows[1].vertices <= rows[2].vertices);
    assert!(rows[1].width <= rows[2].width);
}
