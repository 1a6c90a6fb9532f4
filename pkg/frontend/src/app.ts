/** The single-page practice report form.
 *
 * All vocabulary (domains, functions, weight criteria) comes from the
 * service's schema endpoint; nothing is hard-coded. Scores are rendered
 * exactly as the service sent them - the UI does no arithmetic on them.
 */

import { ApiClient, ApiError, Report, SchemaResponse } from "./api.js";
import { FormState, clampWeight, emptyForm, isSubmittable, toReportRequest, weightSum } from "./form.js";

const REPORT_COLUMNS = ["NAME", "API CLIENT", "CHANNEL", "FINAL-SCORE"];

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  if (text !== undefined) node.textContent = text;
  return node;
}

export class App {
  private state: FormState = emptyForm([]);
  private pending: AbortController | null = null;

  private readonly banner = el("div", { id: "banner", hidden: "" });
  private readonly fieldset = el("fieldset", { id: "form-fields", disabled: "" });
  private readonly domainSelect = el("select", { id: "domain" });
  private readonly functionSelect = el("select", { id: "function" });
  private readonly hostAgents = el("input", { id: "host-agents", type: "checkbox" });
  private readonly weightsBox = el("div", { id: "weights" });
  private readonly sumBadge = el("span", { id: "sum-badge" }, "0 of 100");
  private readonly submitButton = el("button", { id: "submit", type: "submit", disabled: "" }, "Generate report");
  private readonly reportBox = el("section", { id: "report" });

  constructor(
    private readonly root: HTMLElement,
    private readonly client: ApiClient,
  ) {}

  install(): void {
    const form = el("form", { id: "report-form" });
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submit();
    });

    const context = el("div", { id: "context" });
    context.append(
      labelled("Domain", this.domainSelect),
      labelled("Function", this.functionSelect),
      labelled("Must host agents", this.hostAgents),
    );
    this.domainSelect.addEventListener("change", () => {
      this.state.domain = this.domainSelect.value;
      this.refresh();
    });
    this.functionSelect.addEventListener("change", () => {
      this.state.func = this.functionSelect.value;
      this.refresh();
    });
    this.hostAgents.addEventListener("change", () => {
      this.state.hostAgents = this.hostAgents.checked;
    });

    const controls = el("div", { id: "controls" });
    controls.append(this.sumBadge, this.submitButton);
    this.fieldset.append(context, this.weightsBox, controls);
    form.append(this.fieldset);
    this.root.replaceChildren(this.banner, form, this.reportBox);

    void this.loadVocabulary();
  }

  async loadVocabulary(): Promise<void> {
    this.hideBanner();
    let schema: SchemaResponse;
    try {
      schema = await this.client.getSchema();
    } catch (error) {
      this.fieldset.setAttribute("disabled", "");
      this.showBanner(describe(error), { retry: true });
      return;
    }
    this.populate(schema);
  }

  private populate(schema: SchemaResponse): void {
    fillSelect(this.domainSelect, schema.names.Domain);
    fillSelect(this.functionSelect, schema.names.Function);

    this.state = emptyForm(schema.criteriaNames);
    this.weightsBox.replaceChildren();
    for (const name of schema.criteriaNames) {
      const input = el("input", {
        type: "number", min: "0", max: "100", step: "1",
        "data-weight": name, placeholder: "0",
      });
      const note = el("span", { class: "weight-note", "data-note": name });
      input.addEventListener("input", () => {
        const { value, message } = clampWeight(input.value);
        this.state.weights[name] = value;
        if (message && value !== null) input.value = String(value);
        note.textContent = message ?? "";
        this.refresh();
      });
      const row = el("div", { class: "weight-row" });
      row.append(labelled(name, input), note);
      this.weightsBox.append(row);
    }

    const usable = schema.names.Domain.length > 0 && schema.names.Function.length > 0;
    if (usable) {
      this.fieldset.removeAttribute("disabled");
    } else {
      this.fieldset.setAttribute("disabled", "");
      this.showBanner("the service has no practice data yet; the form is disabled");
    }
    this.refresh();
  }

  private refresh(): void {
    this.sumBadge.textContent = `${weightSum(this.state)} of 100`;
    if (isSubmittable(this.state)) {
      this.submitButton.removeAttribute("disabled");
    } else {
      this.submitButton.setAttribute("disabled", "");
    }
  }

  async submit(): Promise<void> {
    if (!isSubmittable(this.state)) {
      return; // guard: the button being enabled is not trusted
    }
    this.hideBanner();
    this.pending?.abort(); // a new submit supersedes the pending one
    const controller = new AbortController();
    this.pending = controller;
    let report: Report;
    try {
      report = await this.client.postReport(toReportRequest(this.state), controller.signal);
    } catch (error) {
      if (controller.signal.aborted) return;
      this.showBanner(describe(error));
      return;
    } finally {
      if (this.pending === controller) this.pending = null;
    }
    this.renderReport(report);
  }

  renderReport(report: Report): void {
    if (report.rows.length === 0) {
      this.reportBox.replaceChildren(el("p", { id: "empty-report" }, "no practices in dataset"));
      return;
    }
    const table = el("table", { id: "report-table" });
    const head = el("tr");
    for (const column of REPORT_COLUMNS) head.append(el("th", {}, column));
    const thead = el("thead");
    thead.append(head);

    const tbody = el("tbody");
    let highlighted = false;
    for (const row of report.rows) {
      const tr = el("tr");
      if (!highlighted && report.recommended !== undefined && row.name === report.recommended) {
        tr.classList.add("recommended");
        highlighted = true;
      }
      tr.append(
        el("td", {}, row.name),
        el("td", {}, row.apiClient),
        el("td", {}, row.channel),
        el("td", {}, String(row.finalScore)),
      );
      tbody.append(tr);
    }
    table.append(thead, tbody);
    this.reportBox.replaceChildren(table);
    if (report.excluded.length > 0) {
      this.reportBox.append(
        el("p", { id: "excluded" }, `excluded (cannot host agents): ${report.excluded.join(", ")}`),
      );
    }
  }

  private showBanner(message: string, options: { retry?: boolean } = {}): void {
    this.banner.replaceChildren(el("span", {}, message));
    if (options.retry) {
      const retry = el("button", { id: "retry", type: "button" }, "Retry");
      retry.addEventListener("click", () => void this.loadVocabulary());
      this.banner.append(retry);
    }
    this.banner.removeAttribute("hidden");
  }

  private hideBanner(): void {
    this.banner.setAttribute("hidden", "");
    this.banner.replaceChildren();
  }
}

function labelled(text: string, control: HTMLElement): HTMLLabelElement {
  const label = el("label", {}, text);
  label.append(control);
  return label;
}

function fillSelect(select: HTMLSelectElement, options: string[]): void {
  select.replaceChildren(el("option", { value: "" }, "choose…"));
  for (const option of options) select.append(el("option", { value: option }, option));
}

function describe(error: unknown): string {
  if (error instanceof ApiError) return error.body.message;
  return "cannot reach the service";
}

export function installApp(root: HTMLElement, client: ApiClient): App {
  const app = new App(root, client);
  app.install();
  return app;
}
