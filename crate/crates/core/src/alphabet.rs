//! Declared variable and operator sets.
//!
//! Both sets are finite and totally ordered by declaration order: the first
//! declared name is the smallest. Internally variables and operators are
//! referred to by rank; the alphabet maps ranks back to names and labels.

use std::collections::HashMap;

use crate::error::Error;
use crate::term::{DiffWord, OperatorId, Variable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    vars: Vec<String>,
    ops: Vec<u32>,
    var_rank: HashMap<String, Variable>,
    op_rank: HashMap<u32, OperatorId>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<V, S, O>(vars: V, ops: O) -> Result<Self, Error>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        O: IntoIterator<Item = u32>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let ops: Vec<u32> = ops.into_iter().collect();
        let mut var_rank = HashMap::new();
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::Alphabet(format!("invalid variable name `{v}`")));
            }
            if var_rank.insert(v.clone(), Variable(i as u32)).is_some() {
                return Err(Error::Alphabet(format!("duplicate variable `{v}`")));
            }
        }
        let mut op_rank = HashMap::new();
        for (i, &o) in ops.iter().enumerate() {
            if op_rank.insert(o, OperatorId(i as u32)).is_some() {
                return Err(Error::Alphabet(format!("duplicate operator index {o}")));
            }
        }
        Ok(Alphabet { vars, ops, var_rank, op_rank })
    }

    pub fn var(&self, name: &str) -> Option<Variable> {
        self.var_rank.get(name).copied()
    }

    /// Operator with the given index label.
    pub fn op(&self, label: u32) -> Option<OperatorId> {
        self.op_rank.get(&label).copied()
    }

    pub fn var_name(&self, v: Variable) -> &str {
        &self.vars[v.0 as usize]
    }

    pub fn op_label(&self, op: OperatorId) -> u32 {
        self.ops[op.0 as usize]
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn num_ops(&self) -> usize {
        self.ops.len()
    }

    /// Variables in increasing order.
    pub fn variables(&self) -> Vec<Variable> {
        (0..self.vars.len() as u32).map(Variable).collect()
    }

    /// Operators in increasing order.
    pub fn operators(&self) -> Vec<OperatorId> {
        (0..self.ops.len() as u32).map(OperatorId).collect()
    }

    /// Every differential word with at most `max_depth` operators, in
    /// increasing order.
    pub fn words(&self, max_depth: usize) -> Vec<DiffWord> {
        let ops = self.operators();
        let mut strings: Vec<Vec<OperatorId>> = vec![Vec::new()];
        let mut layer: Vec<Vec<OperatorId>> = vec![Vec::new()];
        for _ in 0..max_depth {
            let mut next = Vec::with_capacity(layer.len() * ops.len());
            for s in &layer {
                for &o in &ops {
                    let mut t = s.clone();
                    t.push(o);
                    next.push(t);
                }
            }
            strings.extend(next.iter().cloned());
            layer = next;
        }
        let mut words: Vec<DiffWord> = self
            .variables()
            .into_iter()
            .flat_map(|v| strings.iter().map(move |s| DiffWord::new(v, s.clone())))
            .collect();
        words.sort();
        words
    }
}
