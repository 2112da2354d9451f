// Community statistics panel: bar charts whose height is the tweet share
// and whose darkness is the member coverage, plus one circular progress per
// member for the active theme/media selection. Every number shown comes
// straight from the API payload; nothing is recomputed client-side.

import { lightnessRamp } from "./palette.js";
import type { CommunityStatsPayload } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface StatsCallbacks {
  onSelect: (theme: string | null, media: string | null) => void;
}

export function renderStats(
  container: HTMLElement,
  stats: CommunityStatsPayload | null,
  callbacks: StatsCallbacks,
): void {
  container.replaceChildren();
  if (!stats) {
    container.classList.add("hidden");
    return;
  }
  container.classList.remove("hidden");

  const heading = document.createElement("h3");
  heading.textContent = `Community ${stats.community} (${stats.member_count} members)`;
  container.appendChild(heading);

  if (stats.tweet_count === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "no tweets";
    container.appendChild(empty);
    return;
  }

  container.appendChild(
    barChart("Themes", stats.tweet_share.theme, stats.member_coverage.theme, (name) =>
      callbacks.onSelect(name, null),
    ),
  );
  container.appendChild(
    barChart("Medias", stats.tweet_share.media, stats.member_coverage.media, (name) =>
      callbacks.onSelect(null, name),
    ),
  );

  const shares = Object.entries(stats.member_share);
  if (shares.length > 0) {
    const section = document.createElement("div");
    section.className = "member-progress";
    const label = document.createElement("h4");
    label.textContent = "Member share of selection";
    section.appendChild(label);
    for (const [member, share] of shares) {
      section.appendChild(circularProgress(member, share));
    }
    container.appendChild(section);
  }
}

function barChart(
  title: string,
  shares: Record<string, number>,
  coverage: Record<string, number>,
  onBar: (name: string) => void,
): HTMLElement {
  const wrapper = document.createElement("div");
  wrapper.className = "bar-chart";
  const heading = document.createElement("h4");
  heading.textContent = title;
  wrapper.appendChild(heading);

  const names = Object.keys(shares).sort((a, b) => shares[b] - shares[a] || a.localeCompare(b));
  for (const name of names) {
    const share = shares[name];
    const row = document.createElement("div");
    row.className = "bar-row";

    const label = document.createElement("span");
    label.className = "bar-label";
    label.textContent = name;
    row.appendChild(label);

    const track = document.createElement("div");
    track.className = "bar-track";
    const bar = document.createElement("div");
    bar.className = "bar";
    // calc() keeps the API value verbatim instead of a float-noisy product
    bar.style.width = `calc(${String(share)} * 100%)`;
    bar.style.backgroundColor = lightnessRamp(coverage[name] ?? 0);
    bar.setAttribute("data-share", String(share));
    bar.setAttribute("data-coverage", String(coverage[name] ?? 0));
    bar.setAttribute("data-name", name);
    bar.addEventListener("click", () => onBar(name));
    track.appendChild(bar);
    row.appendChild(track);

    const value = document.createElement("span");
    value.className = "bar-value";
    value.textContent = `${(share * 100).toFixed(0)}%`;
    row.appendChild(value);

    wrapper.appendChild(row);
  }
  return wrapper;
}

function circularProgress(member: string, share: number): HTMLElement {
  const wrapper = document.createElement("div");
  wrapper.className = "progress";
  wrapper.setAttribute("data-member", member);
  wrapper.setAttribute("data-share", String(share));

  const size = 44;
  const radius = 18;
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${size} ${size}`);
  svg.setAttribute("width", String(size));
  svg.setAttribute("height", String(size));

  const track = document.createElementNS(SVG_NS, "circle");
  track.setAttribute("cx", String(size / 2));
  track.setAttribute("cy", String(size / 2));
  track.setAttribute("r", String(radius));
  track.setAttribute("fill", "none");
  track.setAttribute("stroke", "#eee");
  track.setAttribute("stroke-width", "5");
  svg.appendChild(track);

  const arc = document.createElementNS(SVG_NS, "circle");
  const circumference = 2 * Math.PI * radius;
  arc.setAttribute("cx", String(size / 2));
  arc.setAttribute("cy", String(size / 2));
  arc.setAttribute("r", String(radius));
  arc.setAttribute("fill", "none");
  arc.setAttribute("stroke", "hsl(210, 60%, 45%)");
  arc.setAttribute("stroke-width", "5");
  arc.setAttribute("stroke-dasharray", `${share * circumference} ${circumference}`);
  arc.setAttribute("transform", `rotate(-90 ${size / 2} ${size / 2})`);
  arc.setAttribute("class", "progress-arc");
  svg.appendChild(arc);

  const caption = document.createElement("span");
  caption.textContent = member;

  wrapper.appendChild(svg);
  wrapper.appendChild(caption);
  return wrapper;
}
