export interface Scale {
  map(value: number): number;
  ticks(): number[];
  readonly domain: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 === 0 ? 1 : d1 - d0;
  return {
    domain,
    map: (v) => r0 + ((v - d0) / span) * (r1 - r0),
    ticks: () => linearTicks(d0, d1),
  };
}

export function logScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  if (d0 <= 0 || d1 <= 0) {
    throw new RangeError(`log scale domain must be positive, got [${d0}, ${d1}]`);
  }
  const [r0, r1] = range;
  const l0 = Math.log10(d0);
  const l1 = Math.log10(d1);
  const span = l1 - l0 === 0 ? 1 : l1 - l0;
  return {
    domain,
    map: (v) => r0 + ((Math.log10(v) - l0) / span) * (r1 - r0),
    ticks: () => decadeTicks(d0, d1),
  };
}

/** Round-valued ticks with a 1/2/5 step, covering [lo, hi]. */
export function linearTicks(lo: number, hi: number, target = 6): number[] {
  if (!(hi > lo)) return [lo];
  const rawStep = (hi - lo) / target;
  const power = Math.floor(Math.log10(rawStep));
  const base = Math.pow(10, power);
  let step = base;
  for (const mult of [1, 2, 5, 10]) {
    step = mult * base;
    if (step >= rawStep) break;
  }
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi * (1 + 1e-12); v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

/** Powers of ten spanning [lo, hi]. */
export function decadeTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  for (let p = Math.ceil(Math.log10(lo) - 1e-12); Math.pow(10, p) <= hi * (1 + 1e-12); p++) {
    ticks.push(Math.pow(10, p));
  }
  return ticks.length > 0 ? ticks : [lo];
}

/** Compact axis-label formatting: 0.002, 15, 1e-5, 2e+6 ... */
export function formatTick(value: number): string {
  if (value === 0) return "0";
  const abs = Math.abs(value);
  if (abs >= 1e-4 && abs < 1e6) {
    const text = value.toPrecision(6);
    return text.includes(".") ? text.replace(/\.?0+$/, "") : text;
  }
  return value.toExponential(0).replace("e", "e");
}
