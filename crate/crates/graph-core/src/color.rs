use std::collections::HashMap;

/// Interns color descriptions to dense ids in first-seen order.
///
/// The empty description is always id 0, the color of uncolored vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorTable {
    descs: Vec<String>,
    ids: HashMap<String, u32>,
}

impl Default for ColorTable {
    fn default() -> Self {
        Self::new()
    }
}

impl ColorTable {
    pub fn new() -> Self {
        let mut t = ColorTable { descs: Vec::new(), ids: HashMap::new() };
        t.intern("");
        t
    }

    pub fn intern(&mut self, desc: &str) -> u32 {
        if let Some(&id) = self.ids.get(desc) {
            return id;
        }
        let id = self.descs.len() as u32;
        self.descs.push(desc.to_string());
        self.ids.insert(desc.to_string(), id);
        id
    }

    pub fn lookup(&self, desc: &str) -> Option<u32> {
        self.ids.get(desc).copied()
    }

    pub fn describe(&self, id: u32) -> Option<&str> {
        self.descs.get(id as usize).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.descs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.descs.is_empty()
    }

    /// Makes sure every id up to `max_id` is interned, using placeholder
    /// descriptions for ids that were produced outside the table (for
    /// example by refinement).
    pub fn reserve_through(&mut self, max_id: u32) {
        while self.descs.len() <= max_id as usize {
            let mut desc = format!("#{}", self.descs.len());
            while self.ids.contains_key(&desc) {
                desc.push('\'');
            }
            self.intern(&desc);
        }
    }
}
