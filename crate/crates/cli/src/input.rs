use std::fs;
use std::path::Path;

use fracdelta::{CVector, Complex64, ComplexMatrix};
use serde::Deserialize;

use crate::CliError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    dim: usize,
    re: Vec<Vec<f64>>,
    #[serde(default)]
    im: Option<Vec<Vec<f64>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VectorFile {
    re: Vec<f64>,
    #[serde(default)]
    im: Option<Vec<f64>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Matrix(MatrixFile),
    Vector(VectorFile),
}

pub enum Sequence {
    Matrices(Vec<ComplexMatrix>),
    Vectors(Vec<CVector>),
}

fn read<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn matrix_from(m: MatrixFile, origin: &str) -> Result<ComplexMatrix, CliError> {
    let check = |part: &str, rows: &[Vec<f64>]| {
        if rows.len() != m.dim {
            return Err(CliError::Input(format!(
                "{origin}: \"{part}\" has {} rows, expected dim = {}",
                rows.len(),
                m.dim
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != m.dim {
                return Err(CliError::Input(format!(
                    "{origin}: row {i} of \"{part}\" has {} entries, expected {}",
                    row.len(),
                    m.dim
                )));
            }
        }
        Ok(())
    };
    check("re", &m.re)?;
    if let Some(im) = &m.im {
        check("im", im)?;
    }
    let data = (0..m.dim * m.dim)
        .map(|k| {
            let (i, j) = (k / m.dim, k % m.dim);
            Complex64::new(m.re[i][j], m.im.as_ref().map_or(0.0, |im| im[i][j]))
        })
        .collect();
    ComplexMatrix::new(m.dim, data).map_err(|e| CliError::Input(format!("{origin}: {e}")))
}

fn vector_from(v: VectorFile, origin: &str) -> Result<CVector, CliError> {
    if let Some(im) = &v.im {
        if im.len() != v.re.len() {
            return Err(CliError::Input(format!(
                "{origin}: \"im\" has {} entries, \"re\" has {}",
                im.len(),
                v.re.len()
            )));
        }
    }
    let data = (0..v.re.len())
        .map(|i| Complex64::new(v.re[i], v.im.as_ref().map_or(0.0, |im| im[i])))
        .collect();
    CVector::new(data).map_err(|e| CliError::Input(format!("{origin}: {e}")))
}

pub fn matrix(path: &Path) -> Result<ComplexMatrix, CliError> {
    matrix_from(read(path)?, &path.display().to_string())
}

pub fn vector(path: &Path) -> Result<CVector, CliError> {
    vector_from(read(path)?, &path.display().to_string())
}

pub fn sequence(path: &Path) -> Result<Sequence, CliError> {
    let entries: Vec<Entry> = read(path)?;
    let origin = |i: usize| format!("{} entry {i}", path.display());
    match entries.first() {
        None => Err(CliError::Input(format!("{}: empty sequence", path.display()))),
        Some(Entry::Matrix(_)) => entries
            .into_iter()
            .enumerate()
            .map(|(i, e)| match e {
                Entry::Matrix(m) => matrix_from(m, &origin(i)),
                Entry::Vector(_) => Err(CliError::Input(format!("{}: expected a matrix", origin(i)))),
            })
            .collect::<Result<_, _>>()
            .map(Sequence::Matrices),
        Some(Entry::Vector(_)) => entries
            .into_iter()
            .enumerate()
            .map(|(i, e)| match e {
                Entry::Vector(v) => vector_from(v, &origin(i)),
                Entry::Matrix(_) => Err(CliError::Input(format!("{}: expected a vector", origin(i)))),
            })
            .collect::<Result<_, _>>()
            .map(Sequence::Vectors),
    }
}
