import init, { krs_steps, krs_inverse_grid, delta_t_facets } from "./pkg/krs_demo.js";

const $ = (id) => document.getElementById(id);

function el(tag, attrs = {}, ...children) {
  const e = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  for (const c of children) e.append(c);
  return e;
}

function call(f, ...args) {
  try {
    return { ok: JSON.parse(f(...args)) };
  } catch (err) {
    return { err: String(err) };
  }
}

function showError(out, msg) {
  out.replaceChildren(el("p", { class: "err" }, msg));
}

function tableau(rows, mark) {
  const t = el("table", { class: "tab" });
  rows.forEach((row, i) => {
    const tr = el("tr");
    row.forEach((x, j) => {
      const td = el("td", {}, String(x));
      if (mark && mark(i, j, row)) td.className = "pivot";
      tr.append(td);
    });
    t.append(tr);
  });
  return t;
}

function bitableau(b, mark) {
  return el("span", {}, tableau(b.left, mark), tableau(b.right, mark));
}

function runSteps() {
  const out = $("steps-out");
  const r = call(krs_steps, $("sigma").value);
  if (r.err) return showError(out, r.err);
  const v = r.ok;
  const parts = [el("div", { class: "step" }, bitableau(v.sigma), ` shape (${v.sigma.shape.join(",")})`)];
  let cur = v.sigma;
  for (const s of v.steps) {
    const mark = (i, j, row) => i === s.pivot_row && j === row.length - 1;
    parts.push(
      el("div", { class: "step" },
        bitableau(cur, mark),
        ` → output (${s.ell}, ${s.r}), rest ${s.rest.text}`),
    );
    cur = s.rest;
  }
  parts.push(el("pre", {}, `u = ${v.u.join(" ")}\nv = ${v.v.join(" ")}\nkrs(Σ) = ${v.monomial}`));
  out.replaceChildren(...parts);
}

function buildGrid() {
  const m = Number($("inv-m").value);
  const n = Number($("inv-n").value);
  const t = el("table", { class: "grid" });
  for (let i = 0; i < m; i++) {
    const tr = el("tr");
    for (let j = 0; j < n; j++) {
      tr.append(el("td", {}, el("input", { type: "number", min: "0", value: "0", "data-i": i, "data-j": j })));
    }
    t.append(tr);
  }
  $("inv-grid").replaceChildren(t);
}

function runInverse() {
  const out = $("inverse-out");
  const rows = [];
  for (const input of $("inv-grid").querySelectorAll("input")) {
    const i = Number(input.dataset.i);
    const j = Number(input.dataset.j);
    (rows[i] ||= [])[j] = Number(input.value) || 0;
  }
  const r = call(krs_inverse_grid, JSON.stringify(rows));
  if (r.err) return showError(out, r.err);
  const v = r.ok;
  out.replaceChildren(
    el("div", { class: "step" }, bitableau(v.sigma)),
    el("pre", {},
      `monomial ${v.monomial} (degree ${v.degree})\n` +
      `Σ = ${v.sigma.text}\nshape (${v.sigma.shape.join(",")})\n` +
      `γ_t, t = 1.. : ${v.gamma.join(" ")}\nα_k, k = 1.. : ${v.alpha.join(" ")}`),
  );
}

function facetPicture(cells, m, n) {
  const on = new Set(cells.map(([i, j]) => `${i},${j}`));
  const t = el("table", { class: "facet" });
  for (let i = 1; i <= m; i++) {
    const tr = el("tr");
    for (let j = 1; j <= n; j++) tr.append(el("td", on.has(`${i},${j}`) ? { class: "on" } : {}));
    t.append(tr);
  }
  return t;
}

function runFacets() {
  const out = $("facets-out");
  const [m, n, t] = ["fac-m", "fac-n", "fac-t"].map((id) => Number($(id).value));
  const r = call(delta_t_facets, m, n, t);
  if (r.err) return showError(out, r.err);
  const v = r.ok;
  out.replaceChildren(
    el("p", {}, `${v.count} facets, expected size ${v.expected_size}, ${v.pure ? "pure" : "not pure"}`),
    ...v.facets.map((f) => facetPicture(f, m, n)),
  );
}

await init();
$("run-steps").onclick = runSteps;
$("inv-resize").onclick = buildGrid;
$("run-inverse").onclick = runInverse;
$("run-facets").onclick = runFacets;
buildGrid();
runSteps();
runFacets();
