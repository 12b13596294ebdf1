import init, { classify, factorize, fuseStates } from "./pkg/clifford_wasm.js";

const $ = (id) => document.getElementById(id);

function show(prefix, run, summarize) {
  const summary = $(`${prefix}-summary`);
  const out = $(`${prefix}-out`);
  try {
    const json = run();
    const value = JSON.parse(json);
    summary.className = "summary";
    summary.textContent = summarize(value);
    out.textContent = json;
  } catch (err) {
    summary.className = "summary error";
    summary.textContent = String(err);
    out.textContent = "";
  }
}

const num = (id) => Number.parseInt($(id).value, 10);

function runClassify() {
  show("cls", () => classify(num("cls-p"), num("cls-q")), (v) => {
    const agree = v.oracle.agrees ? "oracle agrees" : "oracle DISAGREES";
    return `Cl(${v.signature}) = ${v.matrix_form}, ring ${v.ring}, ${agree}`;
  });
}

function runFactorize() {
  show("fac", () => factorize(num("fac-p"), num("fac-q")), (v) => {
    if (v.odd) return `${v.odd.display} ${v.odd.verified ? "verified" : "FAILED"}`;
    return v.chains.map((c) => `${c.display}  ${c.transition}  ${c.verified ? "verified" : "FAILED"}`).join("\n");
  });
}

function runFuse() {
  show("fuse", () => fuseStates($("fuse-a").value, $("fuse-b").value), (v) => {
    return v.note ? `${v.result}  (${v.note})` : v.result;
  });
}

await init();
$("cls-go").addEventListener("click", runClassify);
$("fac-go").addEventListener("click", runFactorize);
$("fuse-go").addEventListener("click", runFuse);
runClassify();
runFactorize();
runFuse();
