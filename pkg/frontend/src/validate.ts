// Client-side form validation. The rules mirror the API's checks one for
// one, so anything rejected here would come back as a 400 anyway.

import type { DetectRequest, FilterRequest } from "./types.js";

export const SORT_CHOICES = ["random", "wd", "iw"] as const;
export const EDGE_TYPES = ["retweet", "mention"] as const;

export interface FieldError {
  field: string;
  message: string;
}

const ISO_DATE = /^\d{4}-\d{2}-\d{2}$/;

function isIsoDate(value: string): boolean {
  if (!ISO_DATE.test(value)) return false;
  const parsed = new Date(value + "T00:00:00Z");
  if (Number.isNaN(parsed.getTime())) return false;
  return parsed.toISOString().slice(0, 10) === value;
}

export function validateDetect(form: DetectRequest): FieldError[] {
  const errors: FieldError[] = [];
  if (form.omega !== undefined) {
    if (typeof form.omega !== "number" || Number.isNaN(form.omega)) {
      errors.push({ field: "omega", message: "omega must be a number" });
    } else if (form.omega < 0 || form.omega > 0.5) {
      errors.push({ field: "omega", message: "omega must be in [0, 0.5]" });
    }
  }
  if (form.sort_choice !== undefined && !SORT_CHOICES.includes(form.sort_choice as never)) {
    errors.push({ field: "sort_choice", message: `sort_choice must be one of ${SORT_CHOICES.join(", ")}` });
  }
  if (form.seed !== undefined && !Number.isInteger(form.seed)) {
    errors.push({ field: "seed", message: "seed must be an integer" });
  }
  return errors;
}

export function validateFilter(form: FilterRequest): FieldError[] {
  const errors: FieldError[] = [];
  if (form.min_degree !== undefined) {
    if (!Number.isInteger(form.min_degree) || form.min_degree < 0) {
      errors.push({ field: "min_degree", message: "min_degree must be a non-negative integer" });
    }
  }
  if (form.edge_type !== undefined && !EDGE_TYPES.includes(form.edge_type as never)) {
    errors.push({ field: "edge_type", message: `edge_type must be one of ${EDGE_TYPES.join(", ")}` });
  }
  for (const field of ["themes", "medias"] as const) {
    const value = form[field];
    if (value !== undefined && value !== null) {
      if (!Array.isArray(value) || value.some((x) => typeof x !== "string")) {
        errors.push({ field, message: `${field} must be a list of strings` });
      }
    }
  }
  for (const field of ["date_from", "date_to"] as const) {
    const value = form[field];
    if (value !== undefined && value !== null && !isIsoDate(value)) {
      errors.push({ field, message: `${field} must be an ISO-8601 date` });
    }
  }
  return errors;
}
