mod common;

use common::*;
use gtfs::cohomology::double_cocycle;
use gtfs::indicators::{double_indicator_table, full_indicator_table, IndicatorTable, TableOptions};
use gtfs::problem::Pipeline;
use gtfs::symbols::GroupTheoreticalData;

fn cells_at(t: &IndicatorTable<f64>, g: usize) -> Vec<String> {
    let mut v: Vec<String> =
        t.rows_at(g).map(|r| (0..t.m_max).map(|i| r.cell(i)).collect::<Vec<_>>().join(" ")).collect();
    v.sort();
    v
}

#[test]
fn double_formula_matches_the_diagonal_construction() {
    for (name, omega) in double_corpus() {
        let grp = omega.group().clone();
        let n = grp.order();
        let (p, varpi) = double_cocycle(&omega).unwrap();
        let data = GroupTheoreticalData::with_trivial_psi(p.diagonal().unwrap(), varpi).unwrap();
        let reps: Vec<usize> = grp.conjugacy_classes().iter().map(|c| p.pair(c.representative, 0)).collect();
        let opts = TableOptions { representatives: reps.clone(), ..Default::default() };
        let double = double_indicator_table::<f64>(&omega, 6, &TableOptions::default()).unwrap();
        let mut pipelines = vec![full_indicator_table::<f64>(&data, 6, Pipeline::General, &opts).unwrap()];
        if n <= 6 {
            pipelines.push(full_indicator_table::<f64>(&data, 6, Pipeline::TrivialRestriction, &opts).unwrap());
        }
        for t in &pipelines {
            assert_eq!(t.rows.len(), double.rows.len(), "{name}");
            for (class, &r) in grp.conjugacy_classes().iter().zip(&reps) {
                assert_eq!(cells_at(t, r), cells_at(&double, class.representative), "{name}, {:?}", t.pipeline);
            }
        }
    }
}

#[test]
fn auto_pipeline_choice() {
    for d in corpus() {
        let t = full_indicator_table::<f64>(&d.data, 2, Pipeline::Auto, &TableOptions::default()).unwrap();
        let expect = if d.data.is_adapted() && d.data.psi_trivial() { Pipeline::Adapted } else { Pipeline::General };
        assert_eq!(t.pipeline, expect, "{}", d.name);
        if expect == Pipeline::Adapted {
            let g = full_indicator_table::<f64>(&d.data, 2, Pipeline::General, &TableOptions::default()).unwrap();
            for (a, b) in t.rows.iter().zip(&g.rows) {
                assert!((a.values[1] - b.values[1]).norm() < 1e-9, "{}", d.name);
            }
        }
    }
}

#[test]
fn f32_tables_match_f64() {
    for d in corpus().into_iter().take(8) {
        let a = full_indicator_table::<f64>(&d.data, 4, Pipeline::Auto, &TableOptions::default()).unwrap();
        let b = full_indicator_table::<f32>(&d.data, 4, Pipeline::Auto, &TableOptions::default()).unwrap();
        assert_eq!(a.rows.len(), b.rows.len());
        for x in &a.rows {
            let found = b.rows.iter().any(|y| {
                y.g == x.g
                    && y.degree == x.degree
                    && x.values.iter().zip(&y.values).all(|(u, v)| (u.re - v.re as f64).abs() < 1e-4 && (u.im - v.im as f64).abs() < 1e-4)
            });
            assert!(found, "{}: g = {} {:?}", d.name, x.g, x.values);
        }
    }
}
