// Filter and detection forms. Inputs are validated client-side with the
// same rules the API enforces; a request is only sent when the form is
// clean, and API errors come back attached to the offending field.

import { ApiError } from "./api.js";
import type { DetectRequest, FilterRequest } from "./types.js";
import { EDGE_TYPES, SORT_CHOICES, validateDetect, validateFilter, type FieldError } from "./validate.js";

export interface FormHandle {
  element: HTMLFormElement;
  showErrors: (errors: FieldError[]) => void;
}

function field(labelText: string, name: string, input: HTMLElement): HTMLElement {
  const wrapper = document.createElement("label");
  wrapper.className = "field";
  wrapper.setAttribute("data-field", name);
  const caption = document.createElement("span");
  caption.textContent = labelText;
  const error = document.createElement("span");
  error.className = "field-error";
  error.setAttribute("data-error-for", name);
  wrapper.append(caption, input, error);
  return wrapper;
}

function showErrors(form: HTMLFormElement, errors: FieldError[]): void {
  for (const span of form.querySelectorAll<HTMLElement>(".field-error")) span.textContent = "";
  for (const error of errors) {
    const span = form.querySelector<HTMLElement>(`[data-error-for="${error.field}"]`);
    if (span) span.textContent = error.message;
  }
}

function numberInput(name: string, value: string, step = "any"): HTMLInputElement {
  const input = document.createElement("input");
  input.type = "number";
  input.name = name;
  input.step = step;
  input.value = value;
  return input;
}

function select(name: string, options: readonly string[]): HTMLSelectElement {
  const element = document.createElement("select");
  element.name = name;
  for (const option of options) {
    const opt = document.createElement("option");
    opt.value = option;
    opt.textContent = option;
    element.appendChild(opt);
  }
  return element;
}

function textInput(name: string, placeholder = ""): HTMLInputElement {
  const input = document.createElement("input");
  input.type = "text";
  input.name = name;
  input.placeholder = placeholder;
  return input;
}

function csv(value: string): string[] | null {
  const items = value
    .split(",")
    .map((s) => s.trim())
    .filter((s) => s.length > 0);
  return items.length > 0 ? items : null;
}

export function detectForm(onSubmit: (body: DetectRequest) => Promise<void>): FormHandle {
  const form = document.createElement("form");
  form.className = "detect-form";
  const omega = numberInput("omega", "0.1");
  const sort = select("sort_choice", SORT_CHOICES);
  sort.value = "iw";
  const seed = numberInput("seed", "0", "1");
  const button = document.createElement("button");
  button.type = "submit";
  button.textContent = "Detect communities";

  form.append(
    field("omega (0 to 0.5)", "omega", omega),
    field("initial order", "sort_choice", sort),
    field("seed", "seed", seed),
    button,
  );

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const body: DetectRequest = {
      omega: omega.value === "" ? undefined : Number(omega.value),
      sort_choice: sort.value,
      seed: seed.value === "" ? undefined : Number(seed.value),
    };
    const errors = validateDetect(body);
    showErrors(form, errors);
    if (errors.length > 0) return;
    button.disabled = true;
    onSubmit(body)
      .catch((error) => surfaceApiError(form, error))
      .finally(() => {
        button.disabled = false;
      });
  });

  return { element: form, showErrors: (errors) => showErrors(form, errors) };
}

export function filterForm(onSubmit: (body: FilterRequest) => Promise<void>): FormHandle {
  const form = document.createElement("form");
  form.className = "filter-form";
  const minDegree = numberInput("min_degree", "0", "1");
  const edgeType = select("edge_type", EDGE_TYPES);
  const themes = textInput("themes", "theme1, theme2");
  const medias = textInput("medias", "media1, media2");
  const dateFrom = textInput("date_from", "YYYY-MM-DD");
  const dateTo = textInput("date_to", "YYYY-MM-DD");
  const button = document.createElement("button");
  button.type = "submit";
  button.textContent = "Apply filters";

  form.append(
    field("minimum degree", "min_degree", minDegree),
    field("edge type", "edge_type", edgeType),
    field("themes", "themes", themes),
    field("medias", "medias", medias),
    field("from date", "date_from", dateFrom),
    field("to date", "date_to", dateTo),
    button,
  );

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const body: FilterRequest = {
      min_degree: minDegree.value === "" ? 0 : Number(minDegree.value),
      edge_type: edgeType.value,
      themes: csv(themes.value),
      medias: csv(medias.value),
      date_from: dateFrom.value.trim() || null,
      date_to: dateTo.value.trim() || null,
    };
    const errors = validateFilter(body);
    showErrors(form, errors);
    if (errors.length > 0) return;
    button.disabled = true;
    onSubmit(body)
      .catch((error) => surfaceApiError(form, error))
      .finally(() => {
        button.disabled = false;
      });
  });

  return { element: form, showErrors: (errors) => showErrors(form, errors) };
}

function surfaceApiError(form: HTMLFormElement, error: unknown): void {
  const message = error instanceof ApiError ? error.message : String(error);
  const guesses = ["omega", "sort_choice", "seed", "min_degree", "edge_type", "themes", "medias", "date_from", "date_to"];
  const target = guesses.find((name) => message.includes(name));
  showErrors(form, [{ field: target ?? "form", message }]);
  if (!target) {
    let banner = form.querySelector<HTMLElement>(".form-error");
    if (!banner) {
      banner = document.createElement("div");
      banner.className = "form-error";
      form.prepend(banner);
    }
    banner.textContent = message;
  }
}
