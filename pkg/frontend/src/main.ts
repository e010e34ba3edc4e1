// Browser entry point: a small teacher bar to pick tasks, and the abacus app.

import { mount } from "./app.js";
import type { LanguageCode, TaskJson } from "./types.js";

const params = new URLSearchParams(location.search);
const apiBase = params.get("api") ?? "http://127.0.0.1:8605";

const root = document.getElementById("app");
const controls = document.getElementById("controls");
if (!root || !controls) throw new Error("index.html must provide #app and #controls");

const app = mount(root, apiBase, { rodCount: 2 });

controls.innerHTML = `
  <label>task <select id="kind">
    <option value="set_number">set a number</option>
    <option value="set_and_say">set and say</option>
  </select></label>
  <label>number <input id="target" type="number" min="0" value="8" size="4"></label>
  <label>language <select id="lang">
    <option>english</option><option>french</option><option>maori</option><option>breton</option>
  </select></label>
  <label>rods <input id="rods" type="number" min="1" max="6" value="2" size="2"></label>
  <button id="start">start task</button>
  <label><input id="teacher" type="checkbox"> teacher mode</label>
  <label><input id="words" type="checkbox"> say it</label>
`;

const byId = <T extends HTMLElement>(id: string) => document.getElementById(id) as T;

byId<HTMLButtonElement>("start").addEventListener("click", () => {
  const kind = byId<HTMLSelectElement>("kind").value as TaskJson["kind"];
  const task: TaskJson = {
    kind,
    register: "virtual_abacus",
    rod_count: Number(byId<HTMLInputElement>("rods").value),
    target: Number(byId<HTMLInputElement>("target").value),
  };
  if (kind === "set_and_say") {
    task.language = byId<HTMLSelectElement>("lang").value as LanguageCode;
  }
  app.startTask(task);
});

byId<HTMLInputElement>("teacher").addEventListener("change", (event) => {
  app.setTeacherMode((event.target as HTMLInputElement).checked);
});

byId<HTMLInputElement>("words").addEventListener("change", (event) => {
  app.setWordsPanel((event.target as HTMLInputElement).checked);
});
