export type Attrs = Record<string, string | number>;

export function escapeText(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function el(tag: string, attrs: Attrs, children: string[] = []): string {
  const attrText = Object.entries(attrs)
    .map(([k, v]) => ` ${k}="${typeof v === "number" ? round(v) : escapeText(v)}"`)
    .join("");
  if (children.length === 0) {
    return `<${tag}${attrText}/>`;
  }
  return `<${tag}${attrText}>${children.join("")}</${tag}>`;
}

export function textEl(x: number, y: number, content: string, attrs: Attrs = {}): string {
  return el("text", { x, y, ...attrs }, [escapeText(content)]);
}

export function polyline(points: Array<[number, number]>, attrs: Attrs): string {
  const pts = points.map(([x, y]) => `${round(x)},${round(y)}`).join(" ");
  return el("polyline", { points: pts, fill: "none", ...attrs });
}

export function svgDocument(width: number, height: number, body: string[]): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`,
    el("rect", { x: 0, y: 0, width, height, fill: "white" }),
    ...body,
    "</svg>",
    "",
  ].join("\n");
}

/** Fixed-precision coordinates keep the output byte-stable across runs. */
function round(v: number): string {
  const text = v.toFixed(2);
  return text === "-0.00" ? "0.00" : text;
}
