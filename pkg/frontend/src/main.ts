import world from "world-atlas/countries-110m.json";

import { ApiClient } from "./api.js";
import { App } from "./app.js";
import { topologyToCountries } from "./geo.js";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app element");

const app = new App({
  client: new ApiClient("", (url) => fetch(url)),
  root,
  countries: topologyToCountries(world),
  onStateChange: (query) => history.replaceState(null, "", `?${query}`),
});

void app.start(location.search.replace(/^\?/, ""));

window.addEventListener("popstate", () => {
  void app.start(location.search.replace(/^\?/, ""));
});
