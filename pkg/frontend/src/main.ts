import { ApiClient } from "./api.js";
import { installApp } from "./app.js";

declare global {
  interface Window {
    IASELECT_API_BASE?: string;
  }
}

const root = document.getElementById("app");
if (root === null) {
  throw new Error("missing #app element");
}
// service origin: data attribute wins, then a global, then same-origin
const base = root.dataset.apiBase ?? window.IASELECT_API_BASE ?? "";
installApp(root, new ApiClient(base));
